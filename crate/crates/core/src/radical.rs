//! The fuzzy prime radical `FRad(I)`, with `FRad(I)(x)` the largest `t`
//! such that `x ∈ Rad(I_t)`.

use crate::corpus::{combinations, ideal_chains};
use crate::error::{Error, Result};
use crate::fuzzy::FuzzyIdeal;
use crate::grid::ValueGrid;
use crate::ideal::{crisp_radical, is_prime_ideal, is_semiprime_ideal, prime_avoiding, CrispIdeal};
use crate::primeness::{is_prime_new, is_semiprime_new};
use crate::ring::{quotient_ring, Element, Ring};
use crate::scalar::Scalar;
use crate::Membership;

/// Radicalizes every level of the chain. Levels that collapse onto the
/// same ideal keep the larger value.
pub fn frad<V: Scalar>(i: &FuzzyIdeal<V>) -> Result<FuzzyIdeal<V>> {
    i.ensure_nonconstant()?;
    let ring = i.ring();
    let mut cuts = Vec::with_capacity(i.num_levels());
    for (c, v) in i.levels() {
        cuts.push((v.clone(), crisp_radical(ring, c)?));
    }
    FuzzyIdeal::from_cut_family(ring, cuts)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TraceEntry<V: Scalar = Membership> {
    pub x: Element,
    /// Image values `t` of the input with `x ∈ Rad(I_t)`, descending.
    pub levels: Vec<V>,
    pub sup: V,
}

#[derive(Clone, Debug)]
pub struct RadicalReport<V: Scalar = Membership> {
    pub input: FuzzyIdeal<V>,
    pub frad: FuzzyIdeal<V>,
    pub trace: Vec<TraceEntry<V>>,
    /// Prime fuzzy ideals above the input taking a value just above
    /// `FRad(x)` at a traced `x`.
    pub witnesses: Vec<(Element, FuzzyIdeal<V>)>,
}

/// Elements traced in reports: all of a table ring, or the chain
/// generators and 1 over the integers.
fn trace_elements<V: Scalar>(i: &FuzzyIdeal<V>) -> Vec<Element> {
    let ring = i.ring();
    match ring.elements() {
        Some(all) => all.collect(),
        None => {
            let mut out: Vec<Element> = i
                .levels()
                .iter()
                .map(|(c, _)| Element::Integer(c.generator().expect("integer ideal").clone().into()))
                .collect();
            out.push(ring.one());
            out.dedup();
            out
        }
    }
}

/// `FRad(I)` with a per-element trace and excluding-prime witnesses.
pub fn radical_report<V: Scalar>(i: &FuzzyIdeal<V>) -> Result<RadicalReport<V>> {
    let f = frad(i)?;
    let ring = i.ring();
    let mut radicals = Vec::with_capacity(i.num_levels());
    for (c, v) in i.levels() {
        radicals.push((v.clone(), crisp_radical(ring, c)?));
    }
    let mut trace = Vec::new();
    let mut witnesses = Vec::new();
    for x in trace_elements(i) {
        let levels: Vec<V> = radicals.iter().filter(|(_, r)| r.contains(&x)).map(|(v, _)| v.clone()).collect();
        let sup = levels.first().expect("the last level is the ring").clone();
        if sup != f.value(&x)? {
            return Err(Error::CheckFailed(format!("trace of {} disagrees with FRad", ring.display_element(&x))));
        }
        if sup < *i.top() {
            let above = i.image().filter(|v| **v > sup).last().expect("top lies above");
            let s = sup.midpoint(above);
            witnesses.push((x.clone(), witness_prime_excluding(i, &x, &s)?));
        }
        trace.push(TraceEntry { x, levels, sup });
    }
    Ok(RadicalReport { input: i.clone(), frad: f, trace, witnesses })
}

/// A prime fuzzy ideal `P >= I` with `P(x) = s`: `I(0)` on a prime
/// `M ⊇ Rad(I_s)` avoiding `x`, `s` elsewhere.
pub fn witness_prime_excluding<V: Scalar>(i: &FuzzyIdeal<V>, x: &Element, s: &V) -> Result<FuzzyIdeal<V>> {
    i.ensure_nonconstant()?;
    let ring = i.ring();
    ring.check(x)?;
    if s >= i.top() {
        return Err(Error::Precondition(format!("s = {s} must lie below I(0) = {}", i.top())));
    }
    let rad = crisp_radical(ring, &i.cut(s)?)?;
    if rad.contains(x) {
        return Err(Error::Precondition(format!("{} lies in Rad(I_s)", ring.display_element(x))));
    }
    let m = prime_avoiding(ring, &rad, x)?;
    FuzzyIdeal::two_valued(ring, m, i.top().clone(), s.clone())
}

/// Elements at which fuzzy ideals are compared: the whole table ring, or
/// `0..=bound` for the integers.
fn comparison_elements(ring: &Ring, bound: Option<u64>) -> Result<Vec<Element>> {
    match ring.elements() {
        Some(all) => Ok(all.collect()),
        None => {
            let b = bound.ok_or_else(|| Error::Precondition("comparisons over Z need a bound".into()))?;
            Ok((0..=b as i64).map(Element::from).collect())
        }
    }
}

/// Checks that the bound covers the chain of `i` over the integers.
fn check_bound<V: Scalar>(i: &FuzzyIdeal<V>, bound: Option<u64>) -> Result<()> {
    if !i.ring().is_integers() {
        return Ok(());
    }
    let b = bound.ok_or_else(|| Error::Precondition("checks over Z need a generator bound".into()))?;
    let max = i.levels().iter().map(|(c, _)| c.generator().expect("integer").clone()).max().expect("nonempty");
    if b < 3 || max > b.into() {
        return Err(Error::Precondition(format!("generator bound {b} must be at least 3 and cover the chain")));
    }
    Ok(())
}

/// Nonconstant fuzzy ideals with values in `grid` whose proper cuts are
/// all prime (or all semiprime).
pub fn grid_primes<V: Scalar>(
    ring: &Ring,
    grid: &ValueGrid<V>,
    bound: Option<u64>,
    semiprime: bool,
) -> Result<Vec<FuzzyIdeal<V>>> {
    let g = grid.len();
    let desc: Vec<V> = grid.values().iter().rev().cloned().collect();
    let mut out = Vec::new();
    for chain in ideal_chains(ring, bound, g)? {
        if chain.len() < 2 {
            continue;
        }
        let mut ok = true;
        for c in &chain[..chain.len() - 1] {
            ok &= if semiprime { is_semiprime_ideal(ring, c)? } else { is_prime_ideal(ring, c)? };
        }
        if !ok {
            continue;
        }
        for choice in combinations(g, chain.len()) {
            let levels = chain.iter().cloned().zip(choice.iter().map(|&k| desc[k].clone())).collect();
            out.push(FuzzyIdeal::from_chain(ring, levels)?);
        }
    }
    Ok(out)
}

/// Pointwise minimum over `family` at `elements`; `None` for an empty family.
fn pointwise_min<V: Scalar>(family: &[&FuzzyIdeal<V>], elements: &[Element]) -> Result<Option<Vec<V>>> {
    if family.is_empty() {
        return Ok(None);
    }
    let mut out = Vec::with_capacity(elements.len());
    for x in elements {
        let mut m = family[0].value(x)?;
        for f in &family[1..] {
            let v = f.value(x)?;
            if v < m {
                m = v;
            }
        }
        out.push(m);
    }
    Ok(Some(out))
}

fn compare<V: Scalar>(what: &str, target: &FuzzyIdeal<V>, got: Option<Vec<V>>, elements: &[Element]) -> Result<()> {
    let got = got.ok_or_else(|| Error::CheckFailed(format!("{what}: the family above the ideal is empty")))?;
    for (x, v) in elements.iter().zip(got) {
        let want = target.value(x)?;
        if want != v {
            return Err(Error::CheckFailed(format!(
                "{what} differs at {}: expected {want}, got {v}",
                target.ring().display_element(x)
            )));
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct FradIntersectionReport<V: Scalar = Membership> {
    pub frad: FuzzyIdeal<V>,
    pub primes_above: usize,
    pub semiprimes_above: usize,
    pub witnesses_checked: usize,
}

/// Checks `FRad(I) = ⋂ primes above I = ⋂ semiprimes above I`, the
/// families being the ideals with values in `grid` (extended by the image
/// of `I`). Over the integers, generators and compared elements are
/// bounded by `bound`.
pub fn frad_intersection_check<V: Scalar>(
    i: &FuzzyIdeal<V>,
    grid: &ValueGrid<V>,
    bound: Option<u64>,
) -> Result<FradIntersectionReport<V>> {
    check_bound(i, bound)?;
    let report = radical_report(i)?;
    let ring = i.ring();
    let grid = grid.covering(i);
    let elements = comparison_elements(ring, bound)?;
    let mut above = [Vec::new(), Vec::new()];
    for (k, semiprime) in [false, true].into_iter().enumerate() {
        for p in grid_primes(ring, &grid, bound, semiprime)? {
            if i.le(&p)? {
                above[k].push(p);
            }
        }
    }
    let [primes, semiprimes] = above;
    compare("intersection of primes", &report.frad, pointwise_min(&primes.iter().collect::<Vec<_>>(), &elements)?, &elements)?;
    compare(
        "intersection of semiprimes",
        &report.frad,
        pointwise_min(&semiprimes.iter().collect::<Vec<_>>(), &elements)?,
        &elements,
    )?;
    for (x, p) in &report.witnesses {
        let s = p.bottom();
        if !is_prime_new(p)? || !i.le(p)? || p.value(x)? != *s || *s <= report.frad.value(x)? {
            return Err(Error::CheckFailed(format!("excluding prime at {} is not valid", ring.display_element(x))));
        }
    }
    Ok(FradIntersectionReport {
        frad: report.frad,
        primes_above: primes.len(),
        semiprimes_above: semiprimes.len(),
        witnesses_checked: report.witnesses.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionReport {
    pub primes_above: usize,
    /// Pairs of primes whose intersection was checked to be semiprime.
    pub pairs_checked: usize,
}

/// For semiprime `p`: `p` is the intersection of the grid-valued primes
/// above it, and intersections of pairs of those primes are semiprime.
pub fn semiprime_intersection_check<V: Scalar>(
    p: &FuzzyIdeal<V>,
    grid: &ValueGrid<V>,
    bound: Option<u64>,
    max_pairs: usize,
) -> Result<IntersectionReport> {
    check_bound(p, bound)?;
    if !is_semiprime_new(p)? {
        return Err(Error::Precondition("the intersection check needs a semiprime fuzzy ideal".into()));
    }
    let ring = p.ring();
    let grid = grid.covering(p);
    let elements = comparison_elements(ring, bound)?;
    let mut primes = Vec::new();
    for q in grid_primes(ring, &grid, bound, false)? {
        if p.le(&q)? {
            primes.push(q);
        }
    }
    compare("intersection of primes", p, pointwise_min(&primes.iter().collect::<Vec<_>>(), &elements)?, &elements)?;
    let mut pairs_checked = 0;
    'outer: for (a, qa) in primes.iter().enumerate() {
        for qb in &primes[a + 1..] {
            if pairs_checked == max_pairs {
                break 'outer;
            }
            let both = FuzzyIdeal::intersect(&[qa.clone(), qb.clone()])?;
            if !both.is_constant() && !is_semiprime_new(&both)? {
                return Err(Error::CheckFailed(format!("{qa:?} ∩ {qb:?} is not semiprime")));
            }
            pairs_checked += 1;
        }
    }
    Ok(IntersectionReport { primes_above: primes.len(), pairs_checked })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalPropertiesReport {
    pub idempotent: bool,
    pub extensive: bool,
    /// Checked when `P <= Q`.
    pub monotone: Option<bool>,
    pub intersection: bool,
    pub endpoints: bool,
    pub cuts: bool,
    /// `P` is semiprime exactly when `FRad(P) = P`.
    pub fixed_point: bool,
}

impl RadicalPropertiesReport {
    pub fn all_hold(&self) -> bool {
        self.idempotent
            && self.extensive
            && self.monotone != Some(false)
            && self.intersection
            && self.endpoints
            && self.cuts
            && self.fixed_point
    }
}

/// Idempotence, extensiveness, monotonicity, commutation with
/// intersection, endpoint values, cut equality and the fixed-point
/// criterion, for `P` (and the pair `P, Q`).
pub fn radical_properties_check<V: Scalar>(p: &FuzzyIdeal<V>, q: &FuzzyIdeal<V>) -> Result<RadicalPropertiesReport> {
    let ring = p.ring();
    let (fp, fq) = (frad(p)?, frad(q)?);
    let meet = FuzzyIdeal::intersect(&[p.clone(), q.clone()])?;
    let mut cuts = true;
    for (c, t) in &p.levels()[..p.num_levels() - 1] {
        cuts &= fp.cut(t)? == crisp_radical(ring, c)?;
    }
    let report = RadicalPropertiesReport {
        idempotent: frad(&fp)? == fp,
        extensive: p.le(&fp)?,
        monotone: if p.le(q)? { Some(fp.le(&fq)?) } else { None },
        intersection: frad(&meet)? == FuzzyIdeal::intersect(&[fp.clone(), fq])?,
        endpoints: fp.value(&ring.zero())? == p.value(&ring.zero())?
            && fp.value(&ring.one())? == p.value(&ring.one())?,
        cuts,
        fixed_point: is_semiprime_new(p)? == (fp == *p),
    };
    if report.all_hold() {
        Ok(report)
    } else {
        Err(Error::CheckFailed(format!("radical properties fail for {p:?}, {q:?}: {report:?}")))
    }
}

/// One reading of the radical of a ring: `R` modulo the strict support of
/// `FRad(χ_{0})`. Experimental; nothing here is asserted as a theorem.
#[derive(Clone)]
pub struct RingRadicalReading {
    pub support: CrispIdeal,
    pub quotient: Ring,
    /// `Rad` of the zero ideal of the quotient is zero.
    pub quotient_radical_is_zero: bool,
    /// `FRad` of every zero-type ideal over the default grid is
    /// value-equivalent to `FRad(χ_{0})`.
    pub zero_types_equivalent: bool,
}

pub fn ring_radical_reading(ring: &Ring) -> Result<RingRadicalReading> {
    let zero = CrispIdeal::zero(ring);
    let chi: FuzzyIdeal<Membership> = FuzzyIdeal::characteristic(ring, zero)?;
    let f = frad(&chi)?;
    let support = f.strict_support()?.clone();
    let quotient = quotient_ring(ring, &support)?;
    let qzero = CrispIdeal::zero(&quotient);
    let quotient_radical_is_zero = crisp_radical(&quotient, &qzero)? == qzero;
    let grid = ValueGrid::<Membership>::from_base(crate::corpus::default_palette())?;
    let mut zero_types_equivalent = true;
    for (s, t) in grid.ordered_pairs() {
        let z = FuzzyIdeal::zero_type(ring, t.clone(), s.clone())?;
        zero_types_equivalent &= frad(&z)?.value_equivalent(&f)?;
    }
    Ok(RingRadicalReading { support, quotient, quotient_radical_is_zero, zero_types_equivalent })
}
