//! Crisp two-sided ideals: generation, lattice enumeration, the prime,
//! completely prime and semiprime tests, radicals and prime avoidance.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::ring::{Element, Ring, RingKind, TableRing};
use crate::set::ElementSet;

/// A two-sided ideal: an element set for table rings, or `nZ` for the
/// integers (`n = 0` is the zero ideal, `n = 1` the whole ring).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CrispIdeal(Repr);

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Table(ElementSet),
    Integer(BigUint),
}

impl CrispIdeal {
    /// The ideal `nZ`.
    pub fn integer(n: impl Into<BigUint>) -> Self {
        CrispIdeal(Repr::Integer(n.into()))
    }

    pub(crate) fn from_set(set: ElementSet) -> Self {
        CrispIdeal(Repr::Table(set))
    }

    /// Validates that `elements` is closed under the ideal operations.
    pub fn from_subset(ring: &Ring, elements: &[Element]) -> Result<Self> {
        let t = ring.require_table("explicit element sets")?;
        let mut set = ElementSet::empty(t.size());
        for e in elements {
            ring.check(e)?;
            set.insert(e.index().expect("checked"));
        }
        if let Some(reason) = ideal_axiom_failure(t, &set) {
            return Err(Error::NotAnIdeal(reason));
        }
        Ok(CrispIdeal::from_set(set))
    }

    pub fn zero(ring: &Ring) -> Self {
        match ring.table() {
            Some(t) => CrispIdeal::from_set(ElementSet::from_indices(t.size(), [t.zero()])),
            None => CrispIdeal::integer(0u32),
        }
    }

    pub fn whole(ring: &Ring) -> Self {
        match ring.table() {
            Some(t) => CrispIdeal::from_set(ElementSet::full(t.size())),
            None => CrispIdeal::integer(1u32),
        }
    }

    pub fn as_set(&self) -> Option<&ElementSet> {
        match &self.0 {
            Repr::Table(s) => Some(s),
            Repr::Integer(_) => None,
        }
    }

    /// The non-negative generator `n` of `nZ`.
    pub fn generator(&self) -> Option<&BigUint> {
        match &self.0 {
            Repr::Integer(n) => Some(n),
            Repr::Table(_) => None,
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        match (&self.0, x) {
            (Repr::Table(s), Element::Index(i)) => *i < s.universe() && s.contains(*i),
            (Repr::Integer(n), Element::Integer(v)) => divides(n, v),
            _ => false,
        }
    }

    pub fn is_whole(&self, ring: &Ring) -> bool {
        match &self.0 {
            Repr::Table(s) => s.len() == ring.size().unwrap_or(0),
            Repr::Integer(n) => n.is_one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Table(s) => s.len() == 1,
            Repr::Integer(n) => n.is_zero(),
        }
    }

    /// Cardinality, for table ideals.
    pub fn size(&self) -> Option<usize> {
        self.as_set().map(ElementSet::len)
    }

    pub fn is_subset(&self, other: &CrispIdeal) -> bool {
        match (&self.0, &other.0) {
            (Repr::Table(a), Repr::Table(b)) => a.is_subset(b),
            (Repr::Integer(a), Repr::Integer(b)) => {
                if b.is_zero() {
                    a.is_zero()
                } else {
                    (a % b).is_zero()
                }
            }
            _ => false,
        }
    }

    pub fn is_proper_subset(&self, other: &CrispIdeal) -> bool {
        self != other && self.is_subset(other)
    }

    pub fn intersection(&self, other: &CrispIdeal) -> CrispIdeal {
        match (&self.0, &other.0) {
            (Repr::Table(a), Repr::Table(b)) => CrispIdeal::from_set(a.intersection(b)),
            (Repr::Integer(a), Repr::Integer(b)) => CrispIdeal::integer(a.lcm(b)),
            _ => panic!("intersection of ideals from different backends"),
        }
    }

    /// `I + J`, the least ideal containing both.
    pub fn sum(&self, ring: &Ring, other: &CrispIdeal) -> CrispIdeal {
        match (&self.0, &other.0) {
            (Repr::Table(a), Repr::Table(b)) => {
                CrispIdeal::from_set(additive_sum(ring.table().expect("table ring"), a, b))
            }
            (Repr::Integer(a), Repr::Integer(b)) => CrispIdeal::integer(a.gcd(b)),
            _ => panic!("sum of ideals from different backends"),
        }
    }

    /// The ideal product `IJ`, all finite sums of products `ab`.
    pub fn product(&self, ring: &Ring, other: &CrispIdeal) -> CrispIdeal {
        match (&self.0, &other.0) {
            (Repr::Table(a), Repr::Table(b)) => {
                let t = ring.table().expect("table ring");
                let products = ElementSet::from_indices(
                    t.size(),
                    a.iter().flat_map(|x| b.iter().map(move |y| t.mul(x, y))),
                );
                CrispIdeal::from_set(additive_closure(t, products.iter().collect()))
            }
            (Repr::Integer(a), Repr::Integer(b)) => CrispIdeal::integer(a * b),
            _ => panic!("product of ideals from different backends"),
        }
    }

    /// Members in canonical order, for table ideals.
    pub fn elements(&self) -> Option<impl Iterator<Item = Element> + '_> {
        self.as_set().map(|s| s.iter().map(Element::Index))
    }
}

impl Ord for CrispIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Table(a), Repr::Table(b)) => a.cmp(b),
            (Repr::Integer(a), Repr::Integer(b)) => a.cmp(b),
            (Repr::Table(_), Repr::Integer(_)) => Ordering::Less,
            (Repr::Integer(_), Repr::Table(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for CrispIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn divides(n: &BigUint, v: &BigInt) -> bool {
    if n.is_zero() {
        v.is_zero()
    } else {
        (v.magnitude() % n).is_zero()
    }
}

pub(crate) fn ideal_axiom_failure(t: &TableRing, set: &ElementSet) -> Option<String> {
    if !set.contains(t.zero()) {
        return Some("does not contain zero".into());
    }
    for a in set.iter() {
        if !set.contains(t.neg(a)) {
            return Some(format!("not closed under negation at {a}"));
        }
        for b in set.iter() {
            if !set.contains(t.add(a, b)) {
                return Some(format!("not closed under addition at ({a}, {b})"));
            }
        }
        for r in 0..t.size() {
            if !set.contains(t.mul(r, a)) || !set.contains(t.mul(a, r)) {
                return Some(format!("not absorbing at ({a}, {r})"));
            }
        }
    }
    None
}

/// Additive subgroup generated by `seeds`; in a finite group, all finite sums.
fn additive_closure(t: &TableRing, seeds: Vec<usize>) -> ElementSet {
    let mut set = ElementSet::from_indices(t.size(), [t.zero()]);
    let mut stack = vec![t.zero()];
    while let Some(a) = stack.pop() {
        for &g in &seeds {
            let b = t.add(a, g);
            if set.add(b) {
                stack.push(b);
            }
        }
    }
    set
}

pub(crate) fn additive_sum(t: &TableRing, a: &ElementSet, b: &ElementSet) -> ElementSet {
    if a.is_subset(b) {
        return b.clone();
    }
    if b.is_subset(a) {
        return a.clone();
    }
    ElementSet::from_indices(t.size(), a.iter().flat_map(|x| b.iter().map(move |y| t.add(x, y))))
}

/// `RgR`, the principal two-sided ideal of `g`: the additive span of `{ r g s }`.
pub(crate) fn principal(t: &TableRing, g: usize) -> &ElementSet {
    t.cache.principal[g].get_or_init(|| {
        let n = t.size();
        let mut seen = ElementSet::empty(n);
        let mut seeds = Vec::new();
        for r in 0..n {
            let rg = t.mul(r, g);
            for s in 0..n {
                let e = t.mul(rg, s);
                if seen.add(e) {
                    seeds.push(e);
                }
            }
        }
        additive_closure(t, seeds)
    })
}

/// The least two-sided ideal containing `gens`.
pub fn ideal_generate(ring: &Ring, gens: &[Element]) -> Result<CrispIdeal> {
    for g in gens {
        ring.check(g)?;
    }
    match ring.kind() {
        RingKind::Integers => Ok(CrispIdeal::integer(
            gens.iter().fold(BigUint::zero(), |acc, g| acc.gcd(g.integer().expect("checked").magnitude())),
        )),
        RingKind::Table(t) => {
            let mut set = ElementSet::from_indices(t.size(), [t.zero()]);
            for g in gens {
                let g = g.index().expect("checked");
                if !set.contains(g) {
                    set = additive_sum(t, &set, principal(t, g));
                }
            }
            Ok(CrispIdeal::from_set(set))
        }
    }
}

/// Every two-sided ideal, ordered by (cardinality, bitmask) for table rings.
/// For the integers, `{ nZ : 0 <= n <= bound }` in order of `n`.
pub fn enumerate_ideals(ring: &Ring, bound: Option<u64>) -> Result<Vec<CrispIdeal>> {
    match ring.kind() {
        RingKind::Integers => {
            let bound = bound.ok_or_else(|| {
                Error::Precondition("enumerating ideals of Z needs a generator bound".into())
            })?;
            Ok((0..=bound).map(CrispIdeal::integer).collect())
        }
        RingKind::Table(t) => Ok(table_ideals(t).iter().cloned().map(CrispIdeal::from_set).collect()),
    }
}

/// The ideal lattice, closed under joins of principal ideals.
pub(crate) fn table_ideals(t: &TableRing) -> &[ElementSet] {
    t.cache.ideals.get_or_init(|| {
        let mut seen: HashSet<ElementSet> = HashSet::new();
        let mut list: Vec<ElementSet> = Vec::new();
        for g in 0..t.size() {
            let p = principal(t, g);
            if seen.insert(p.clone()) {
                list.push(p.clone());
            }
        }
        let mut i = 0;
        while i < list.len() {
            for j in 0..i {
                let s = additive_sum(t, &list[i], &list[j]);
                if seen.insert(s.clone()) {
                    list.push(s);
                }
            }
            i += 1;
        }
        list.sort();
        list
    })
}

fn ensure_proper(ring: &Ring, p: &CrispIdeal) -> Result<()> {
    if p.is_whole(ring) {
        Err(Error::NotProper("primeness and semiprimeness are defined for proper ideals"))
    } else {
        Ok(())
    }
}

pub(crate) fn ensure_backend(ring: &Ring, p: &CrispIdeal) -> Result<()> {
    let ok = match ring.table() {
        Some(t) => p.as_set().is_some_and(|s| s.universe() == t.size()),
        None => p.generator().is_some(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::MixedRings)
    }
}

/// A pair `x, y` outside `P` with `xRy ⊆ P`, or `None` when `P` is prime.
pub fn prime_violation(ring: &Ring, p: &CrispIdeal) -> Result<Option<(Element, Element)>> {
    ensure_backend(ring, p)?;
    ensure_proper(ring, p)?;
    match ring.kind() {
        RingKind::Integers => Ok(composite_split(p.generator().expect("integer ideal"))),
        RingKind::Table(t) => {
            let set = p.as_set().expect("table ideal");
            for x in set.complement_iter() {
                for y in set.complement_iter() {
                    if (0..t.size()).all(|r| set.contains(t.mul(t.mul(x, r), y))) {
                        return Ok(Some((Element::Index(x), Element::Index(y))));
                    }
                }
            }
            Ok(None)
        }
    }
}

/// A pair `x, y` outside `P` with `xy ∈ P`, or `None` when `P` is completely prime.
pub fn completely_prime_violation(ring: &Ring, p: &CrispIdeal) -> Result<Option<(Element, Element)>> {
    ensure_backend(ring, p)?;
    ensure_proper(ring, p)?;
    match ring.kind() {
        RingKind::Integers => Ok(composite_split(p.generator().expect("integer ideal"))),
        RingKind::Table(t) => {
            let set = p.as_set().expect("table ideal");
            for x in set.complement_iter() {
                for y in set.complement_iter() {
                    if set.contains(t.mul(x, y)) {
                        return Ok(Some((Element::Index(x), Element::Index(y))));
                    }
                }
            }
            Ok(None)
        }
    }
}

/// An `x` outside `P` with `xRx ⊆ P`, or `None` when `P` is semiprime.
pub fn semiprime_violation(ring: &Ring, p: &CrispIdeal) -> Result<Option<Element>> {
    ensure_backend(ring, p)?;
    ensure_proper(ring, p)?;
    match ring.kind() {
        RingKind::Integers => Ok(square_factor_witness(p.generator().expect("integer ideal"))),
        RingKind::Table(t) => {
            let set = p.as_set().expect("table ideal");
            Ok(set
                .complement_iter()
                .find(|&x| (0..t.size()).all(|r| set.contains(t.mul(t.mul(x, r), x))))
                .map(Element::Index))
        }
    }
}

/// An `x` outside `P` with `x² ∈ P`, or `None` when `P` is completely semiprime.
pub fn completely_semiprime_violation(ring: &Ring, p: &CrispIdeal) -> Result<Option<Element>> {
    ensure_backend(ring, p)?;
    ensure_proper(ring, p)?;
    match ring.kind() {
        RingKind::Integers => Ok(square_factor_witness(p.generator().expect("integer ideal"))),
        RingKind::Table(t) => {
            let set = p.as_set().expect("table ideal");
            Ok(set.complement_iter().find(|&x| set.contains(t.mul(x, x))).map(Element::Index))
        }
    }
}

/// For composite `n`: `(p, n/p)` with `p` the least prime factor.
fn composite_split(n: &BigUint) -> Option<(Element, Element)> {
    if n.is_zero() || arith::is_prime(n) {
        return None;
    }
    let p = arith::smallest_prime_factor(n).expect("n > 1");
    let q = n / &p;
    Some((Element::Integer(p.into()), Element::Integer(q.into())))
}

/// For `n` divisible by `p²`: `n / p`, whose square lies in `nZ`.
fn square_factor_witness(n: &BigUint) -> Option<Element> {
    if n.is_zero() {
        return None;
    }
    arith::prime_factors(n)
        .into_iter()
        .find(|p| (n % (p * p)).is_zero())
        .map(|p| Element::Integer((n / p).into()))
}

pub fn is_prime_ideal(ring: &Ring, p: &CrispIdeal) -> Result<bool> {
    Ok(prime_violation(ring, p)?.is_none())
}

pub fn is_completely_prime_ideal(ring: &Ring, p: &CrispIdeal) -> Result<bool> {
    Ok(completely_prime_violation(ring, p)?.is_none())
}

pub fn is_semiprime_ideal(ring: &Ring, p: &CrispIdeal) -> Result<bool> {
    Ok(semiprime_violation(ring, p)?.is_none())
}

pub fn is_completely_semiprime_ideal(ring: &Ring, p: &CrispIdeal) -> Result<bool> {
    Ok(completely_semiprime_violation(ring, p)?.is_none())
}

/// Prime ideals of a table ring, in enumeration order.
pub(crate) fn table_primes(ring: &Ring) -> Result<Vec<CrispIdeal>> {
    let mut out = Vec::new();
    for i in enumerate_ideals(ring, None)? {
        if !i.is_whole(ring) && is_prime_ideal(ring, &i)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// `Rad(I)`, the intersection of the prime ideals containing `I`; `Rad(R) = R`.
pub fn crisp_radical(ring: &Ring, i: &CrispIdeal) -> Result<CrispIdeal> {
    ensure_backend(ring, i)?;
    if i.is_whole(ring) {
        return Ok(i.clone());
    }
    match ring.kind() {
        RingKind::Integers => Ok(CrispIdeal::integer(arith::radical(i.generator().expect("integer")))),
        RingKind::Table(t) => {
            let mut acc = ElementSet::full(t.size());
            for p in table_primes(ring)? {
                if i.is_subset(&p) {
                    acc.intersect_with(p.as_set().expect("table"));
                }
            }
            Ok(CrispIdeal::from_set(acc))
        }
    }
}

/// Prime ideals containing no smaller prime. In a finite ring every prime
/// is maximal, so these are all the primes; the integers give `[0Z]`.
pub fn minimal_primes(ring: &Ring) -> Result<Vec<CrispIdeal>> {
    if ring.is_integers() {
        return Ok(vec![CrispIdeal::integer(0u32)]);
    }
    let primes = table_primes(ring)?;
    let minimal: Vec<CrispIdeal> = primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q.is_proper_subset(p)))
        .cloned()
        .collect();
    debug_assert_eq!(minimal.len(), primes.len(), "finite rings have no nested primes");
    Ok(minimal)
}

/// A prime `M ⊇ P` with `x ∉ M`, for semiprime `P` and `x ∉ P`.
///
/// Table rings follow the McCoy construction: the sequence `x, x r0 x, ...`
/// stays outside `P`, and `P` grows to an ideal maximal among those missing
/// the sequence. Choices go to the first candidate in canonical order.
pub fn prime_avoiding(ring: &Ring, p: &CrispIdeal, x: &Element) -> Result<CrispIdeal> {
    ring.check(x)?;
    if !is_semiprime_ideal(ring, p)? {
        return Err(Error::Precondition("prime avoidance needs a semiprime ideal".into()));
    }
    if p.contains(x) {
        return Err(Error::Precondition(format!("{} lies in the ideal", ring.display_element(x))));
    }
    match ring.kind() {
        RingKind::Integers => {
            let n = p.generator().expect("integer ideal");
            let v = x.integer().expect("checked").magnitude().clone();
            let p = if n.is_zero() {
                arith::primes().find(|q| !(&v % q).is_zero()).expect("infinitely many primes")
            } else {
                arith::prime_factors(n)
                    .into_iter()
                    .find(|q| !(&v % q).is_zero())
                    .expect("a squarefree n not dividing x has a prime factor missing x")
            };
            Ok(CrispIdeal::integer(p))
        }
        RingKind::Table(t) => {
            let set = p.as_set().expect("table ideal");
            let mut orbit = ElementSet::empty(t.size());
            let mut cur = x.index().expect("checked");
            while orbit.add(cur) {
                let r = (0..t.size())
                    .find(|&r| !set.contains(t.mul(t.mul(cur, r), cur)))
                    .expect("semiprime ideal keeps the sequence outside");
                cur = t.mul(t.mul(cur, r), cur);
            }
            let ideals = table_ideals(t);
            let mut m = set.clone();
            while let Some(next) =
                ideals.iter().find(|j| m.is_subset(j) && **j != m && j.is_disjoint(&orbit))
            {
                m = next.clone();
            }
            Ok(CrispIdeal::from_set(m))
        }
    }
}

/// Deterministic generators for `ideal` relative to `base` (default: the
/// zero ideal): elements taken greedily in canonical order. Never empty;
/// the zero ideal is generated by the zero element.
pub fn canonical_generators(ring: &Ring, ideal: &CrispIdeal, base: Option<&CrispIdeal>) -> Result<Vec<Element>> {
    ensure_backend(ring, ideal)?;
    match ring.kind() {
        RingKind::Integers => Ok(vec![Element::Integer(ideal.generator().expect("integer").clone().into())]),
        RingKind::Table(t) => {
            let target = ideal.as_set().expect("table");
            let mut cur = match base {
                Some(b) => b.as_set().expect("table").clone(),
                None => ElementSet::from_indices(t.size(), [t.zero()]),
            };
            let mut gens = Vec::new();
            for g in target.iter() {
                if cur == *target {
                    break;
                }
                if !cur.contains(g) {
                    cur = additive_sum(t, &cur, principal(t, g));
                    gens.push(Element::Index(g));
                }
            }
            if gens.is_empty() {
                gens.push(Element::Index(t.zero()));
            }
            Ok(gens)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, ElementLiteral, RingSpec};

    fn ring(spec: RingSpec) -> Ring {
        build_ring(&spec).unwrap()
    }

    fn m2() -> Ring {
        ring(RingSpec::mat(2, RingSpec::zn(2)))
    }

    fn e12(r: &Ring) -> Element {
        let lit = |v: i64| ElementLiteral::Integer(v.into());
        r.element_from_literal(&ElementLiteral::Matrix(vec![vec![lit(0), lit(1)], vec![lit(0), lit(0)]]))
            .unwrap()
    }

    fn zn_ideal(n: u64, g: usize) -> (Ring, CrispIdeal) {
        let r = ring(RingSpec::zn(n));
        let i = ideal_generate(&r, &[Element::Index(g)]).unwrap();
        (r, i)
    }

    /// Subset-scan oracle: all subsets satisfying the ideal axioms.
    fn brute_force_ideals(r: &Ring) -> Vec<ElementSet> {
        let t = r.table().unwrap();
        let n = t.size();
        let mut out: Vec<ElementSet> = (0u64..(1 << n))
            .map(|mask| ElementSet::from_indices(n, (0..n).filter(|i| mask >> i & 1 == 1)))
            .filter(|s| ideal_axiom_failure(t, s).is_none())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn nilpotent_generates_whole_matrix_ring() {
        let r = m2();
        let i = ideal_generate(&r, &[e12(&r)]).unwrap();
        assert!(i.is_whole(&r));
        assert_eq!(i.size(), Some(16));
    }

    #[test]
    fn integer_generation_is_gcd() {
        let z = Ring::integers();
        let i = ideal_generate(&z, &[Element::from(4), Element::from(-6)]).unwrap();
        assert_eq!(i, CrispIdeal::integer(2u32));
        assert_eq!(ideal_generate(&z, &[]).unwrap(), CrispIdeal::integer(0u32));
    }

    #[test]
    fn empty_generators_give_zero() {
        let r = ring(RingSpec::zn(12));
        let i = ideal_generate(&r, &[]).unwrap();
        assert!(i.is_zero());
    }

    #[test]
    fn enumeration_matches_subset_oracle() {
        for spec in [
            RingSpec::zn(6),
            RingSpec::zn(8),
            RingSpec::zn(4),
            RingSpec::tri(2, RingSpec::zn(2)),
            RingSpec::Product(vec![RingSpec::zn(2), RingSpec::zn(3)]),
            RingSpec::Product(vec![RingSpec::zn(2), RingSpec::zn(2)]),
        ] {
            let r = ring(spec.clone());
            let fast: Vec<ElementSet> =
                enumerate_ideals(&r, None).unwrap().iter().map(|i| i.as_set().unwrap().clone()).collect();
            assert_eq!(fast, brute_force_ideals(&r), "{spec}");
        }
    }

    #[test]
    fn zn6_lattice() {
        let r = ring(RingSpec::zn(6));
        let ideals = enumerate_ideals(&r, None).unwrap();
        let sets: Vec<Vec<usize>> = ideals.iter().map(|i| i.as_set().unwrap().iter().collect()).collect();
        assert_eq!(sets, vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]);
    }

    #[test]
    fn simple_matrix_ring_has_two_ideals() {
        assert_eq!(enumerate_ideals(&m2(), None).unwrap().len(), 2);
    }

    #[test]
    fn zn12_has_one_ideal_per_divisor() {
        assert_eq!(enumerate_ideals(&ring(RingSpec::zn(12)), None).unwrap().len(), 6);
    }

    #[test]
    fn integer_enumeration_needs_bound() {
        let z = Ring::integers();
        assert!(enumerate_ideals(&z, None).is_err());
        assert_eq!(enumerate_ideals(&z, Some(10)).unwrap().len(), 11);
    }

    #[test]
    fn zero_ideal_of_matrices_is_prime_not_completely_prime() {
        let r = m2();
        let zero = CrispIdeal::zero(&r);
        assert!(is_prime_ideal(&r, &zero).unwrap());
        assert!(!is_completely_prime_ideal(&r, &zero).unwrap());
        assert!(is_semiprime_ideal(&r, &zero).unwrap());
        let (x, y) = completely_prime_violation(&r, &zero).unwrap().unwrap();
        assert_eq!(r.mul(&x, &y).unwrap(), r.zero());
        // the nilpotent from the worked example is also a witness
        let e = e12(&r);
        assert_eq!(r.mul(&e, &e).unwrap(), r.zero());
    }

    #[test]
    fn prime_tests_on_residues_and_integers() {
        let (r, four) = zn_ideal(12, 4);
        assert!(!is_prime_ideal(&r, &four).unwrap());
        assert!(!is_semiprime_ideal(&r, &four).unwrap());
        let (r6, two) = zn_ideal(6, 2);
        assert!(is_completely_prime_ideal(&r6, &two).unwrap());
        assert!(is_semiprime_ideal(&r6, &CrispIdeal::zero(&r6)).unwrap());
        let z = Ring::integers();
        assert!(is_prime_ideal(&z, &CrispIdeal::integer(7u32)).unwrap());
        assert!(is_completely_prime_ideal(&z, &CrispIdeal::integer(0u32)).unwrap());
        assert!(!is_prime_ideal(&z, &CrispIdeal::integer(12u32)).unwrap());
        assert!(is_semiprime_ideal(&z, &CrispIdeal::integer(30u32)).unwrap());
        assert!(!is_semiprime_ideal(&z, &CrispIdeal::integer(18u32)).unwrap());
    }

    #[test]
    fn whole_ring_is_rejected() {
        let r = ring(RingSpec::zn(6));
        let whole = CrispIdeal::whole(&r);
        assert!(matches!(is_prime_ideal(&r, &whole), Err(Error::NotProper(_))));
        assert!(matches!(is_semiprime_ideal(&Ring::integers(), &CrispIdeal::integer(1u32)), Err(Error::NotProper(_))));
    }

    #[test]
    fn radicals() {
        let z = Ring::integers();
        assert_eq!(crisp_radical(&z, &CrispIdeal::integer(12u32)).unwrap(), CrispIdeal::integer(6u32));
        let (r, four) = zn_ideal(12, 4);
        let (_, two) = zn_ideal(12, 2);
        assert_eq!(crisp_radical(&r, &four).unwrap(), two);
        let m = m2();
        assert_eq!(crisp_radical(&m, &CrispIdeal::zero(&m)).unwrap(), CrispIdeal::zero(&m));
        assert!(crisp_radical(&m, &CrispIdeal::whole(&m)).unwrap().is_whole(&m));
    }

    #[test]
    fn minimal_primes_examples() {
        let (r6, two) = zn_ideal(6, 2);
        let (_, three) = zn_ideal(6, 3);
        let mut got = minimal_primes(&r6).unwrap();
        got.sort();
        let mut want = vec![two, three];
        want.sort();
        assert_eq!(got, want);
        let m = m2();
        assert_eq!(minimal_primes(&m).unwrap(), vec![CrispIdeal::zero(&m)]);
        let (r4, two4) = zn_ideal(4, 2);
        assert_eq!(minimal_primes(&r4).unwrap(), vec![two4]);
    }

    #[test]
    fn prime_avoidance_examples() {
        let r6 = ring(RingSpec::zn(6));
        let got = prime_avoiding(&r6, &CrispIdeal::zero(&r6), &Element::Index(2)).unwrap();
        assert_eq!(got, zn_ideal(6, 3).1);
        let z = Ring::integers();
        let got = prime_avoiding(&z, &CrispIdeal::integer(6u32), &Element::from(4)).unwrap();
        assert_eq!(got, CrispIdeal::integer(3u32));
        let got = prime_avoiding(&z, &CrispIdeal::integer(0u32), &Element::from(6)).unwrap();
        assert_eq!(got, CrispIdeal::integer(5u32));
        let m = m2();
        let got = prime_avoiding(&m, &CrispIdeal::zero(&m), &e12(&m)).unwrap();
        assert_eq!(got, CrispIdeal::zero(&m));
    }

    #[test]
    fn prime_avoidance_preconditions() {
        let (r, four) = zn_ideal(12, 4);
        assert!(prime_avoiding(&r, &four, &Element::Index(1)).is_err());
        let r6 = ring(RingSpec::zn(6));
        assert!(prime_avoiding(&r6, &CrispIdeal::zero(&r6), &Element::Index(0)).is_err());
    }

    #[test]
    fn prime_avoidance_postcondition_everywhere() {
        for spec in [RingSpec::zn(12), RingSpec::zn(30), RingSpec::tri(2, RingSpec::zn(2)), RingSpec::zn(6)] {
            let r = ring(spec);
            for p in enumerate_ideals(&r, None).unwrap() {
                if p.is_whole(&r) || !is_semiprime_ideal(&r, &p).unwrap() {
                    continue;
                }
                for x in r.elements().unwrap().filter(|x| !p.contains(x)) {
                    let m = prime_avoiding(&r, &p, &x).unwrap();
                    assert!(is_prime_ideal(&r, &m).unwrap());
                    assert!(p.is_subset(&m));
                    assert!(!m.contains(&x));
                }
            }
        }
    }

    #[test]
    fn canonical_generators_regenerate() {
        let r = ring(RingSpec::zn(12));
        for i in enumerate_ideals(&r, None).unwrap() {
            let gens = canonical_generators(&r, &i, None).unwrap();
            assert_eq!(ideal_generate(&r, &gens).unwrap(), i);
        }
        let (_, four) = zn_ideal(12, 4);
        assert_eq!(canonical_generators(&r, &four, None).unwrap(), vec![Element::Index(4)]);
        assert_eq!(canonical_generators(&r, &CrispIdeal::zero(&r), None).unwrap(), vec![Element::Index(0)]);
    }

    #[test]
    fn from_subset_validates() {
        let r = ring(RingSpec::zn(6));
        assert!(CrispIdeal::from_subset(&r, &[Element::Index(0), Element::Index(3)]).is_ok());
        assert!(CrispIdeal::from_subset(&r, &[Element::Index(0), Element::Index(1)]).is_err());
    }

    #[test]
    fn integer_containment() {
        let four = CrispIdeal::integer(4u32);
        let two = CrispIdeal::integer(2u32);
        let zero = CrispIdeal::integer(0u32);
        assert!(four.is_subset(&two));
        assert!(!two.is_subset(&four));
        assert!(zero.is_subset(&four));
        assert!(!four.is_subset(&zero));
        assert!(four.contains(&Element::from(-8)));
        assert!(!zero.contains(&Element::from(3)));
        assert_eq!(four.intersection(&CrispIdeal::integer(6u32)), CrispIdeal::integer(12u32));
    }
}
