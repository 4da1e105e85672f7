//! Finite value grids used to decide quantifiers over membership values.
//!
//! Every predicate here compares membership values only against each other
//! and against the image of the ideal under test, so a value strictly
//! between two consecutive image members behaves like any other value in
//! that gap. The grid holds one representative per gap (the midpoint)
//! alongside the image itself and the endpoints `0` and `1`.

use crate::error::{Error, Result};
use crate::fuzzy::FuzzyIdeal;
use crate::scalar::Scalar;
use crate::Membership;

#[derive(Clone, Debug, PartialEq)]
pub struct ValueGrid<V: Scalar = Membership> {
    /// Ascending, without duplicates.
    values: Vec<V>,
}

impl<V: Scalar> ValueGrid<V> {
    /// `base ∪ {0, 1}` together with the midpoints of consecutive members.
    pub fn from_base(base: impl IntoIterator<Item = V>) -> Result<Self> {
        let mut core: Vec<V> = vec![V::zero(), V::one()];
        for v in base {
            if !v.in_unit_interval() {
                return Err(Error::ValueOutOfRange(v.to_string()));
            }
            core.push(v);
        }
        sort_dedup(&mut core);
        let mut values = Vec::with_capacity(2 * core.len());
        for w in core.windows(2) {
            values.push(w[0].clone());
            values.push(w[0].midpoint(&w[1]));
        }
        values.push(core.last().expect("contains 1").clone());
        Ok(ValueGrid { values })
    }

    pub fn for_ideal(p: &FuzzyIdeal<V>) -> Self {
        Self::from_base(p.image().cloned()).expect("fuzzy ideal values lie in [0, 1]")
    }

    /// The grid of `p` with extra base values mixed in.
    pub fn for_ideal_with(p: &FuzzyIdeal<V>, extra: &[V]) -> Result<Self> {
        Self::from_base(p.image().cloned().chain(extra.iter().cloned()))
    }

    /// A grid that also covers the image of `p`.
    pub fn covering(&self, p: &FuzzyIdeal<V>) -> Self {
        if p.image().all(|v| self.rank(v).is_some()) {
            return self.clone();
        }
        let base = self.values.iter().cloned().chain(p.image().cloned());
        Self::from_base(base).expect("values lie in [0, 1]")
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn rank(&self, v: &V) -> Option<usize> {
        self.values.binary_search_by(|w| w.partial_cmp(v).expect("comparable values")).ok()
    }

    pub fn contains(&self, v: &V) -> bool {
        self.rank(v).is_some()
    }

    /// The least grid value strictly above `v`.
    pub fn next_above(&self, v: &V) -> Option<&V> {
        self.values.iter().find(|w| *w > v)
    }

    /// Pairs `(s, t)` with `s < t`.
    pub fn ordered_pairs(&self) -> impl Iterator<Item = (&V, &V)> + '_ {
        self.values.iter().enumerate().flat_map(move |(i, s)| self.values[i + 1..].iter().map(move |t| (s, t)))
    }
}

pub(crate) fn sort_dedup<V: Scalar>(values: &mut Vec<V>) {
    values.sort_by(|a, b| a.partial_cmp(b).expect("comparable values"));
    values.dedup();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::CrispIdeal;
    use crate::ring::Ring;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn grid_of_three_valued_ideal() {
        let z = Ring::integers();
        let p = FuzzyIdeal::from_chain(
            &z,
            vec![(CrispIdeal::integer(0u32), q(1, 1)), (CrispIdeal::integer(2u32), q(4, 5)), (CrispIdeal::integer(1u32), q(3, 5))],
        )
        .unwrap();
        let g = ValueGrid::for_ideal(&p);
        let want = [q(0, 1), q(3, 10), q(3, 5), q(7, 10), q(4, 5), q(9, 10), q(1, 1)];
        assert_eq!(g.values(), &want[..]);
        assert_eq!(g.next_above(&q(3, 5)), Some(&q(7, 10)));
        assert_eq!(g.next_above(&q(1, 1)), None);
        assert_eq!(g.rank(&q(4, 5)), Some(4));
        assert!(!g.contains(&q(1, 2)));
        assert_eq!(g.ordered_pairs().count(), 21);
    }

    #[test]
    fn endpoints_always_present() {
        let g = ValueGrid::<BigRational>::from_base([]).unwrap();
        assert_eq!(g.values(), &[q(0, 1), q(1, 2), q(1, 1)]);
        assert!(ValueGrid::from_base([q(5, 4)]).is_err());
    }

    #[test]
    fn covering_adds_missing_values() {
        let z = Ring::integers();
        let g = ValueGrid::<BigRational>::from_base([]).unwrap();
        let p = FuzzyIdeal::zero_type(&z, q(3, 4), q(1, 3)).unwrap();
        let c = g.covering(&p);
        assert!(c.contains(&q(3, 4)) && c.contains(&q(1, 3)));
    }
}
