//! Finite-valued fuzzy ideals, stored canonically as chains of level cuts.
//!
//! A chain `[(C1, v1), ..., (Cm, vm)]` has `C1 ⊂ ... ⊂ Cm = R` and
//! `v1 > ... > vm`; the value at `x` is `vj` for the least `j` with `x ∈ Cj`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::{ensure_backend, ideal_axiom_failure, ideal_generate, CrispIdeal};
use crate::ring::{Element, Ring};
use crate::scalar::{max_of, min_of, Scalar};
use crate::set::ElementSet;
use crate::Membership;

#[derive(Clone)]
pub struct FuzzyIdeal<V: Scalar = Membership> {
    ring: Ring,
    levels: Vec<(CrispIdeal, V)>,
    /// Level index of every element, for table rings.
    level_of: Option<Arc<[u8]>>,
}

fn check_value<V: Scalar>(v: &V) -> Result<()> {
    if v.in_unit_interval() {
        Ok(())
    } else {
        Err(Error::ValueOutOfRange(v.to_string()))
    }
}

impl<V: Scalar> FuzzyIdeal<V> {
    /// Builds a fuzzy ideal from its cut chain, checking every chain invariant.
    pub fn from_chain(ring: &Ring, chain: Vec<(CrispIdeal, V)>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::InvalidChain { level: 0, reason: "the chain is empty".into() });
        }
        for (j, (ideal, v)) in chain.iter().enumerate() {
            ensure_backend(ring, ideal)?;
            check_value(v)?;
            if j > 0 {
                let (prev, pv) = &chain[j - 1];
                if !prev.is_proper_subset(ideal) {
                    return Err(Error::InvalidChain {
                        level: j + 1,
                        reason: "ideal does not strictly contain the previous level".into(),
                    });
                }
                if v >= pv {
                    return Err(Error::InvalidChain { level: j + 1, reason: "values must strictly decrease".into() });
                }
            }
        }
        if !chain.last().expect("nonempty").0.is_whole(ring) {
            return Err(Error::InvalidChain {
                level: chain.len(),
                reason: "the last level must be the whole ring".into(),
            });
        }
        Ok(Self::assemble(ring, chain))
    }

    fn assemble(ring: &Ring, levels: Vec<(CrispIdeal, V)>) -> Self {
        let level_of = ring.table().map(|t| {
            let mut of = vec![(levels.len() - 1) as u8; t.size()];
            for (j, (ideal, _)) in levels.iter().enumerate().rev().skip(1) {
                for x in ideal.as_set().expect("table ideal").iter() {
                    of[x] = j as u8;
                }
            }
            Arc::from(of)
        });
        FuzzyIdeal { ring: ring.clone(), levels, level_of }
    }

    /// Canonicalizes a family of cuts `(α, I_α)`. Listed in any order, the
    /// ideals must grow as the values fall; equal consecutive ideals merge,
    /// keeping the larger value.
    pub(crate) fn from_cut_family(ring: &Ring, mut family: Vec<(V, CrispIdeal)>) -> Result<Self> {
        family.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("comparable values"));
        family.dedup_by(|b, a| a.0 == b.0);
        let mut levels: Vec<(CrispIdeal, V)> = Vec::with_capacity(family.len());
        for (v, ideal) in family {
            check_value(&v)?;
            match levels.last() {
                Some((prev, _)) if *prev == ideal => {}
                Some((prev, _)) if !prev.is_subset(&ideal) => {
                    return Err(Error::InvalidChain {
                        level: levels.len() + 1,
                        reason: "cuts do not increase as values decrease".into(),
                    })
                }
                _ => levels.push((ideal, v)),
            }
        }
        match levels.last() {
            Some((last, _)) if last.is_whole(ring) => Ok(Self::assemble(ring, levels)),
            _ => Err(Error::InvalidChain { level: levels.len(), reason: "the lowest cut is not the whole ring".into() }),
        }
    }

    /// Converts a total assignment on a table ring, checking both axioms
    /// pointwise and the cut criterion; the two checks must agree.
    pub fn from_map(ring: &Ring, values: &[V]) -> Result<Self> {
        let t = ring.require_table("building a fuzzy ideal from a value map")?;
        let n = t.size();
        if values.len() != n {
            return Err(Error::Precondition(format!("expected {n} values, got {}", values.len())));
        }
        for v in values {
            check_value(v)?;
        }
        let mut pointwise = None;
        'outer: for x in 0..n {
            for y in 0..n {
                let (vx, vy) = (&values[x], &values[y]);
                let axiom = if values[t.sub(x, y)] < min_of(vx, vy) {
                    "I(x - y) >= I(x) ∧ I(y)"
                } else if values[t.mul(x, y)] < max_of(vx, vy) {
                    "I(xy) >= I(x) ∨ I(y)"
                } else {
                    continue;
                };
                pointwise = Some(Error::FuzzyAxiom {
                    axiom,
                    x: ring.display_element(&Element::Index(x)),
                    y: ring.display_element(&Element::Index(y)),
                });
                break 'outer;
            }
        }
        let mut image: Vec<V> = Vec::new();
        for v in values {
            if !image.contains(v) {
                image.push(v.clone());
            }
        }
        image.sort_by(|a, b| b.partial_cmp(a).expect("comparable values"));
        let cuts: Vec<ElementSet> = image
            .iter()
            .map(|a| ElementSet::from_indices(n, (0..n).filter(|&x| values[x] >= *a)))
            .collect();
        let cuts_ok = cuts.iter().all(|c| ideal_axiom_failure(t, c).is_none());
        match (pointwise, cuts_ok) {
            (None, true) => {
                let chain = cuts.into_iter().map(CrispIdeal::from_set).zip(image).collect();
                Self::from_chain(ring, chain)
            }
            (Some(err), false) => Err(err),
            _ => Err(Error::CheckFailed("pointwise axioms and the cut criterion disagree".into())),
        }
    }

    pub fn constant(ring: &Ring, v: V) -> Result<Self> {
        Self::from_chain(ring, vec![(CrispIdeal::whole(ring), v)])
    }

    /// `t` on `ideal`, `s` elsewhere.
    pub fn two_valued(ring: &Ring, ideal: CrispIdeal, t: V, s: V) -> Result<Self> {
        Self::from_chain(ring, vec![(ideal, t), (CrispIdeal::whole(ring), s)])
    }

    /// `t` at zero and `s` elsewhere, for `s < t`.
    pub fn zero_type(ring: &Ring, t: V, s: V) -> Result<Self> {
        if s >= t {
            return Err(Error::Precondition(format!("zero-type ideal needs s < t, got s = {s}, t = {t}")));
        }
        Self::two_valued(ring, CrispIdeal::zero(ring), t, s)
    }

    /// The characteristic map of `ideal`.
    pub fn characteristic(ring: &Ring, ideal: CrispIdeal) -> Result<Self> {
        if ideal.is_whole(ring) {
            Self::constant(ring, V::one())
        } else {
            Self::two_valued(ring, ideal, V::one(), V::zero())
        }
    }

    /// `⟨x_t⟩`, the fuzzy ideal generated by a singleton.
    pub fn generated_by_point(ring: &Ring, point: &FuzzyPoint<V>) -> Result<Self> {
        let ideal = ideal_generate(ring, std::slice::from_ref(&point.x))?;
        if ideal.is_whole(ring) {
            Self::constant(ring, point.t.clone())
        } else {
            Self::two_valued(ring, ideal, point.t.clone(), V::zero())
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The cut chain, strongest level first.
    pub fn levels(&self) -> &[(CrispIdeal, V)] {
        &self.levels
    }

    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn is_constant(&self) -> bool {
        self.levels.len() == 1
    }

    pub(crate) fn ensure_nonconstant(&self) -> Result<()> {
        if self.is_constant() {
            Err(Error::ConstantIdeal)
        } else {
            Ok(())
        }
    }

    /// `I(0)`, the largest value.
    pub fn top(&self) -> &V {
        &self.levels[0].1
    }

    /// `I(1)`, the smallest value.
    pub fn bottom(&self) -> &V {
        &self.levels[self.levels.len() - 1].1
    }

    /// Image values in decreasing order.
    pub fn image(&self) -> impl Iterator<Item = &V> + '_ {
        self.levels.iter().map(|(_, v)| v)
    }

    pub fn value(&self, x: &Element) -> Result<V> {
        self.ring.check(x)?;
        Ok(self.levels[self.level(x)].1.clone())
    }

    /// Index of the least level containing `x`.
    pub(crate) fn level(&self, x: &Element) -> usize {
        match (&self.level_of, x) {
            (Some(of), Element::Index(i)) => of[*i] as usize,
            _ => self.levels.iter().position(|(c, _)| c.contains(x)).expect("last level is the ring"),
        }
    }

    /// Level indices of all elements, for table rings.
    pub(crate) fn level_table(&self) -> &[u8] {
        self.level_of.as_deref().expect("table ring")
    }

    #[inline]
    pub(crate) fn value_at(&self, i: usize) -> &V {
        &self.levels[self.level_table()[i] as usize].1
    }

    /// Index of the level equal to the cut at `alpha`, if `alpha <= I(0)`.
    pub(crate) fn cut_level(&self, alpha: &V) -> Option<usize> {
        self.levels.iter().rposition(|(_, v)| v >= alpha)
    }

    /// `I_α = { x : I(x) >= α }`.
    pub fn cut(&self, alpha: &V) -> Result<CrispIdeal> {
        self.cut_level(alpha)
            .map(|j| self.levels[j].0.clone())
            .ok_or_else(|| Error::Precondition(format!("cut at {alpha} lies above I(0) = {}", self.top())))
    }

    /// `I_*`, the cut at the top value.
    pub fn top_cut(&self) -> &CrispIdeal {
        &self.levels[0].0
    }

    /// `{ x : I(x) > I(1) }`, the largest proper level.
    pub fn strict_support(&self) -> Result<&CrispIdeal> {
        self.ensure_nonconstant()?;
        Ok(&self.levels[self.levels.len() - 2].0)
    }

    fn ensure_same_ring(&self, other: &Self) -> Result<()> {
        self.ring.ensure_same(&other.ring)
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &Self) -> Result<bool> {
        self.ensure_same_ring(other)?;
        Ok(self.levels.iter().all(|(c, v)| match other.cut_level(v) {
            Some(j) => c.is_subset(&other.levels[j].0),
            None => false,
        }))
    }

    /// Same cut ideals, possibly with different values.
    pub fn value_equivalent(&self, other: &Self) -> Result<bool> {
        self.ensure_same_ring(other)?;
        Ok(self.levels.len() == other.levels.len()
            && self.levels.iter().zip(&other.levels).all(|((a, _), (b, _))| a == b))
    }

    /// Pointwise minimum of a nonempty family.
    pub fn intersect(family: &[Self]) -> Result<Self> {
        let first = family.first().ok_or_else(|| Error::Precondition("empty intersection".into()))?;
        for f in family {
            first.ensure_same_ring(f)?;
        }
        let top = family.iter().map(|f| f.top().clone()).reduce(|a, b| min_of(&a, &b)).expect("nonempty");
        let mut cuts = Vec::new();
        for f in family {
            for v in f.image().filter(|v| **v <= top) {
                let mut c = CrispIdeal::whole(&first.ring);
                for g in family {
                    c = c.intersection(&g.levels[g.cut_level(v).expect("v below every top")].0);
                }
                cuts.push((v.clone(), c));
            }
        }
        Self::from_cut_family(&first.ring, cuts)
    }

    /// Values of every element in canonical order, for table rings.
    pub fn to_map(&self) -> Result<Vec<V>> {
        let t = self.ring.require_table("value maps")?;
        Ok((0..t.size()).map(|i| self.value_at(i).clone()).collect())
    }

    pub fn to_fuzzy_set(&self) -> Result<FuzzySet<V>> {
        Ok(FuzzySet { ring: self.ring.clone(), values: self.to_map()? })
    }

    /// The product `IJ`, computed level by level: `(IJ)_α = I_α J_α`.
    /// Works on both backends.
    pub(crate) fn product_by_cuts(&self, other: &Self) -> Result<Self> {
        self.ensure_same_ring(other)?;
        let top = min_of(self.top(), other.top());
        let mut cuts = Vec::new();
        for v in self.image().chain(other.image()).filter(|v| **v <= top) {
            let a = &self.levels[self.cut_level(v).expect("below top")].0;
            let b = &other.levels[other.cut_level(v).expect("below top")].0;
            cuts.push((v.clone(), a.product(&self.ring, b)));
        }
        Self::from_cut_family(&self.ring, cuts)
    }
}

impl<V: Scalar> PartialEq for FuzzyIdeal<V> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.levels == other.levels
    }
}

impl<V: Scalar> fmt::Debug for FuzzyIdeal<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FuzzyIdeal({}, [", self.ring)?;
        for (j, (c, v)) in self.levels.iter().enumerate() {
            if j > 0 {
                write!(f, ", ")?;
            }
            match (c.generator(), c.size()) {
                (Some(n), _) => write!(f, "({n}Z, {v})")?,
                (None, Some(k)) => write!(f, "({:?}#{k}, {v})", c.as_set().expect("table").iter().collect::<Vec<_>>())?,
                _ => unreachable!(),
            }
        }
        write!(f, "])")
    }
}

/// A singleton `x_t`: value `t > 0` at `x`, zero elsewhere.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzyPoint<V: Scalar = Membership> {
    pub x: Element,
    pub t: V,
}

impl<V: Scalar> FuzzyPoint<V> {
    pub fn new(x: Element, t: V) -> Result<Self> {
        check_value(&t)?;
        if t.is_zero() {
            return Err(Error::ValueOutOfRange("a singleton needs a positive value".into()));
        }
        Ok(FuzzyPoint { x, t })
    }

    /// `x_t <= P`, that is `t <= P(x)`.
    pub fn le(&self, p: &FuzzyIdeal<V>) -> Result<bool> {
        Ok(self.t <= p.value(&self.x)?)
    }
}

/// An arbitrary fuzzy subset of a table ring.
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzySet<V: Scalar = Membership> {
    ring: Ring,
    values: Vec<V>,
}

impl<V: Scalar> FuzzySet<V> {
    pub fn new(ring: &Ring, values: Vec<V>) -> Result<Self> {
        let t = ring.require_table("fuzzy sets")?;
        if values.len() != t.size() {
            return Err(Error::Precondition(format!("expected {} values, got {}", t.size(), values.len())));
        }
        for v in &values {
            check_value(v)?;
        }
        Ok(FuzzySet { ring: ring.clone(), values })
    }

    pub fn singleton(ring: &Ring, point: &FuzzyPoint<V>) -> Result<Self> {
        ring.check(&point.x)?;
        let t = ring.require_table("fuzzy sets")?;
        let mut values = vec![V::zero(); t.size()];
        values[point.x.index().expect("checked")] = point.t.clone();
        Ok(FuzzySet { ring: ring.clone(), values })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn value(&self, x: &Element) -> Result<&V> {
        self.ring.check(x)?;
        Ok(&self.values[x.index().expect("checked")])
    }

    /// Pointwise `self <= p`.
    pub fn le(&self, p: &FuzzyIdeal<V>) -> Result<bool> {
        self.ring.ensure_same(p.ring())?;
        Ok(self.values.iter().enumerate().all(|(i, v)| v <= p.value_at(i)))
    }
}

/// `(A∘B)(z) = max over ab = z of A(a) ∧ B(b)`. Every element factors as
/// `z·1`, so the supremum is never empty.
pub fn compose<V: Scalar>(a: &FuzzySet<V>, b: &FuzzySet<V>) -> Result<FuzzySet<V>> {
    a.ring.ensure_same(&b.ring)?;
    let t = a.ring.require_table("composition")?;
    let n = t.size();
    let mut out = vec![V::zero(); n];
    for x in 0..n {
        if a.values[x].is_zero() {
            continue;
        }
        for y in 0..n {
            let z = t.mul(x, y);
            let m = min_of(&a.values[x], &b.values[y]);
            if m > out[z] {
                out[z] = m;
            }
        }
    }
    Ok(FuzzySet { ring: a.ring.clone(), values: out })
}

/// `⟨F⟩`, the least fuzzy ideal above `F`: each image cut generates an ideal.
pub fn generate<V: Scalar>(f: &FuzzySet<V>) -> Result<FuzzyIdeal<V>> {
    let n = f.ring.require_table("generation")?.size();
    let mut image: Vec<&V> = Vec::new();
    for v in &f.values {
        if !image.contains(&v) {
            image.push(v);
        }
    }
    let mut cuts = Vec::with_capacity(image.len());
    for a in image {
        let gens: Vec<Element> = (0..n).filter(|&x| f.values[x] >= *a).map(Element::Index).collect();
        cuts.push((a.clone(), ideal_generate(&f.ring, &gens)?));
    }
    FuzzyIdeal::from_cut_family(&f.ring, cuts)
}

/// `IJ = ⟨I∘J⟩`.
pub fn fuzzy_product<V: Scalar>(i: &FuzzyIdeal<V>, j: &FuzzyIdeal<V>) -> Result<FuzzyIdeal<V>> {
    generate(&compose(&i.to_fuzzy_set()?, &j.to_fuzzy_set()?)?)
}
