//! Subsets of a finite ring, stored as bitmasks over element indices.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of element indices of a table ring.
///
/// Sets order by cardinality first and then by bitmask, reading element `i`
/// as bit `i` of an unsigned integer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet(FixedBitSet);

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElementSet(bits)
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(universe);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, i: usize) {
        self.0.insert(i);
    }

    /// Inserts `i`, returning `true` if it was absent.
    pub fn add(&mut self, i: usize) -> bool {
        !self.0.put(i)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn complement_iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe()).filter(move |&i| !self.contains(i))
    }

    pub fn first_missing(&self) -> Option<usize> {
        self.complement_iter().next()
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let a = self.0.as_slice();
            let b = other.0.as_slice();
            let n = a.len().max(b.len());
            for k in (0..n).rev() {
                let x = a.get(k).copied().unwrap_or(0);
                let y = b.get(k).copied().unwrap_or(0);
                match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_by_cardinality_then_mask() {
        let a = ElementSet::from_indices(8, [0, 3]);
        let b = ElementSet::from_indices(8, [0, 2]);
        let c = ElementSet::from_indices(8, [0]);
        assert!(c < b);
        assert!(b < a);
        let big = ElementSet::from_indices(130, [0, 129]);
        let small = ElementSet::from_indices(130, [0, 64]);
        assert!(small < big);
    }

    #[test]
    fn add_reports_novelty() {
        let mut s = ElementSet::empty(4);
        assert!(s.add(2));
        assert!(!s.add(2));
        assert_eq!(s.len(), 1);
        assert_eq!(s.first_missing(), Some(0));
    }
}
