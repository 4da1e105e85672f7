//! Deciding procedures for the individual notions.

use crate::error::Result;
use crate::fuzzy::{fuzzy_product, FuzzyIdeal};
use crate::grid::ValueGrid;
use crate::ideal::{
    completely_prime_violation, completely_semiprime_violation, prime_violation, semiprime_violation, CrispIdeal,
};
use crate::ring::{Element, Ring, TableRing};
use crate::scalar::Scalar;

use super::search::sd1_grid_search;
use super::{point_ideal, Notion, Witness};

/// The first failure of `notion` at `p`, or `None` when `p` satisfies it.
pub fn decide<V: Scalar>(notion: Notion, p: &FuzzyIdeal<V>) -> Result<Option<Witness<V>>> {
    p.ensure_nonconstant()?;
    let table = p.ring().table();
    use Notion::*;
    match (notion, table) {
        (D1 | D1L | D1R, _) | (D0 | D0Prime, None) => d1_violation(p),
        (D0, Some(t)) => Ok(d0_table(p, t)),
        (D0Prime, Some(_)) => d0_prime_table(p),
        (D2, _) => cut_violation(p, notion),
        (D3, _) => Ok(prime_violation(p.ring(), p.top_cut())?
            .map(|(x, y)| Witness::Cut { alpha: p.top().clone(), x, y: Some(y) })),
        (CpCuts | SD2 | CspCuts, _) => cut_violation(p, notion),
        (D4, Some(t)) => Ok(d4_table(p, t)),
        (D4, None) => Ok(cut_violation(p, CpCuts)?.map(cut_to_pair)),
        (PrimeNew, Some(t)) => Ok(prime_new_table(p, t)),
        (PrimeNew, None) => Ok(cut_violation(p, D2)?.map(cut_to_pair)),
        (SD4, Some(t)) => Ok(sd4_table(p, t)),
        (SD4, None) => Ok(cut_violation(p, CspCuts)?.map(cut_to_element)),
        (SemiprimeNew, Some(t)) => Ok(semiprime_new_table(p, t)),
        (SemiprimeNew, None) => Ok(cut_violation(p, SD2)?.map(cut_to_element)),
        (SD0Prime, Some(_)) => sd0_prime_table(p),
        (SD0Prime, None) => Ok(cut_violation(p, SD2)?.map(|w| match w {
            Witness::Cut { alpha, x, .. } => Witness::Singleton { x, t: alpha },
            _ => unreachable!("cut witness"),
        })),
        (SD1, Some(_)) => sd1_grid_search(p),
        (SD1, None) => match cut_violation(p, SD2)? {
            Some(Witness::Cut { alpha, x, .. }) => Ok(Some(Witness::Ideal(point_ideal(p.ring(), &x, &alpha)?))),
            _ => Ok(None),
        },
    }
}

fn holds<V: Scalar>(notion: Notion, p: &FuzzyIdeal<V>) -> Result<bool> {
    Ok(decide(notion, p)?.is_none())
}

/// `Inf P(xRy) = P(x) ∨ P(y)` for all `x, y`.
pub fn is_prime_new<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<bool> {
    holds(Notion::PrimeNew, p)
}

/// `Inf P(xRx) = P(x)` for all `x`.
pub fn is_semiprime_new<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<bool> {
    holds(Notion::SemiprimeNew, p)
}

pub fn is_d0<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<bool> {
    holds(Notion::D0, p)
}

pub fn is_d0_prime<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<bool> {
    holds(Notion::D0Prime, p)
}

/// Two-valued with top value 1 and a prime top cut.
pub fn is_d1<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<bool> {
    holds(Notion::D1, p)
}

pub fn is_d2<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<bool> {
    holds(Notion::D2, p)
}

/// Primeness of the top cut.
pub fn is_d3<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<bool> {
    holds(Notion::D3, p)
}

pub fn is_d4<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<bool> {
    holds(Notion::D4, p)
}

pub fn is_sd0_prime<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<bool> {
    holds(Notion::SD0Prime, p)
}

pub fn is_sd1<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<bool> {
    holds(Notion::SD1, p)
}

pub fn is_sd2<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<bool> {
    holds(Notion::SD2, p)
}

pub fn is_sd4<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<bool> {
    holds(Notion::SD4, p)
}

/// `P(xy) = P(0)` forces `P(x) = P(0)` or `P(y) = P(0)`, checked pair by pair.
pub(crate) fn d3_literal_holds<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<bool> {
    let t = p.ring().require_table("the pointwise D3 check")?;
    let lv = p.level_table();
    let n = t.size();
    Ok(!(0..n).any(|x| (0..n).any(|y| lv[t.mul(x, y)] == 0 && lv[x] != 0 && lv[y] != 0)))
}

fn first_outside(ring: &Ring, inner: &CrispIdeal, outer: &CrispIdeal) -> Element {
    match (inner.as_set(), outer.as_set()) {
        (Some(a), Some(b)) => Element::Index(b.iter().find(|&z| !a.contains(z)).expect("proper inclusion")),
        _ => {
            debug_assert!(ring.is_integers());
            Element::Integer(outer.generator().expect("integer ideal").clone().into())
        }
    }
}

/// D1 through its characterization: the witness is a pair of singletons
/// whose generated ideals multiply below `P`.
fn d1_violation<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<Option<Witness<V>>> {
    let ring = p.ring();
    let one = V::one();
    if *p.top() < one {
        return Ok(Some(Witness::Singletons { x: ring.zero(), t: one, y: ring.one(), s: p.top().clone() }));
    }
    if p.num_levels() >= 3 {
        let levels = p.levels();
        let x = first_outside(ring, &levels[0].0, &levels[1].0);
        return Ok(Some(Witness::Singletons { x, t: one, y: ring.one(), s: levels[1].1.clone() }));
    }
    Ok(prime_violation(ring, p.top_cut())?.map(|(x, y)| Witness::Singletons { x, t: one.clone(), y, s: one }))
}

/// First proper cut violating the crisp condition behind `notion`.
fn cut_violation<V: Scalar>(p: &FuzzyIdeal<V>, notion: Notion) -> Result<Option<Witness<V>>> {
    let ring = p.ring();
    let levels = p.levels();
    for (cut, alpha) in &levels[..levels.len() - 1] {
        let alpha = alpha.clone();
        let found = match notion {
            Notion::D2 => prime_violation(ring, cut)?.map(|(x, y)| Witness::Cut { alpha, x, y: Some(y) }),
            Notion::CpCuts => {
                completely_prime_violation(ring, cut)?.map(|(x, y)| Witness::Cut { alpha, x, y: Some(y) })
            }
            Notion::SD2 => semiprime_violation(ring, cut)?.map(|x| Witness::Cut { alpha, x, y: None }),
            Notion::CspCuts => completely_semiprime_violation(ring, cut)?.map(|x| Witness::Cut { alpha, x, y: None }),
            _ => unreachable!("not a cut notion"),
        };
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn cut_to_pair<V: Scalar>(w: Witness<V>) -> Witness<V> {
    match w {
        Witness::Cut { x, y: Some(y), .. } => Witness::Pair { x, y },
        _ => unreachable!("prime cut witness"),
    }
}

fn cut_to_element<V: Scalar>(w: Witness<V>) -> Witness<V> {
    match w {
        Witness::Cut { x, y: None, .. } => Witness::Element { x },
        _ => unreachable!("semiprime cut witness"),
    }
}

/// Lower level index means larger value.
fn sandwich_level(t: &TableRing, lv: &[u8], x: usize, y: usize) -> u8 {
    t.sandwich(x, y).iter().map(|z| lv[z]).max().expect("0 lies in xRy")
}

fn prime_new_table<V: Scalar>(p: &FuzzyIdeal<V>, t: &TableRing) -> Option<Witness<V>> {
    let lv = p.level_table();
    let n = t.size();
    for x in 0..n {
        for y in 0..n {
            if sandwich_level(t, lv, x, y) < lv[x].min(lv[y]) {
                return Some(Witness::Pair { x: Element::Index(x), y: Element::Index(y) });
            }
        }
    }
    None
}

fn semiprime_new_table<V: Scalar>(p: &FuzzyIdeal<V>, t: &TableRing) -> Option<Witness<V>> {
    let lv = p.level_table();
    (0..t.size()).find(|&x| sandwich_level(t, lv, x, x) < lv[x]).map(|x| Witness::Element { x: Element::Index(x) })
}

fn d4_table<V: Scalar>(p: &FuzzyIdeal<V>, t: &TableRing) -> Option<Witness<V>> {
    let lv = p.level_table();
    let n = t.size();
    for x in 0..n {
        for y in 0..n {
            if lv[t.mul(x, y)] < lv[x].min(lv[y]) {
                return Some(Witness::Pair { x: Element::Index(x), y: Element::Index(y) });
            }
        }
    }
    None
}

fn sd4_table<V: Scalar>(p: &FuzzyIdeal<V>, t: &TableRing) -> Option<Witness<V>> {
    let lv = p.level_table();
    (0..t.size()).find(|&x| lv[t.mul(x, x)] != lv[x]).map(|x| Witness::Element { x: Element::Index(x) })
}

/// D0 with the singleton product `x_t y_s = (xy)_{t∧s}`: a violation is a
/// pair with `P(x), P(y) < 1` and `P(xy) > P(x) ∧ P(y)`. Squares are tried
/// before mixed pairs.
fn d0_table<V: Scalar>(p: &FuzzyIdeal<V>, t: &TableRing) -> Option<Witness<V>> {
    let lv = p.level_table();
    let n = t.size();
    let one = V::one();
    let below_one = |i: usize| *p.value_at(i) < one;
    let hit = |x: usize, y: usize| below_one(x) && below_one(y) && lv[t.mul(x, y)] < lv[x].max(lv[y]);
    let (x, y) = (0..n).map(|x| (x, x)).find(|&(x, y)| hit(x, y)).or_else(|| {
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).find(|&(x, y)| hit(x, y))
    })?;
    let pxy = p.value_at(t.mul(x, y)).clone();
    let pick = |i: usize| if *p.value_at(i) < pxy { pxy.clone() } else { one.clone() };
    Some(Witness::Singletons { x: Element::Index(x), t: pick(x), y: Element::Index(y), s: pick(y) })
}

/// D0' over the value grid: the least grid value above `P(x)` is the most
/// favourable `t`, since shrinking `t` only shrinks `⟨x_t⟩`.
fn d0_prime_table<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<Option<Witness<V>>> {
    let grid = ValueGrid::for_ideal(p);
    let points = singleton_ideals(p, &grid)?;
    for (x, a) in &points {
        for (y, b) in &points {
            if fuzzy_product(&a.1, &b.1)?.le(p)? {
                return Ok(Some(Witness::Singletons {
                    x: Element::Index(*x),
                    t: a.0.clone(),
                    y: Element::Index(*y),
                    s: b.0.clone(),
                }));
            }
        }
    }
    Ok(None)
}

fn sd0_prime_table<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<Option<Witness<V>>> {
    let grid = ValueGrid::for_ideal(p);
    for (x, (t, a)) in singleton_ideals(p, &grid)? {
        if fuzzy_product(&a, &a)?.le(p)? {
            return Ok(Some(Witness::Singleton { x: Element::Index(x), t }));
        }
    }
    Ok(None)
}

/// `(x, (t, ⟨x_t⟩))` for every `x` with `P(x) < 1`, `t` the next grid value.
#[allow(clippy::type_complexity)]
fn singleton_ideals<V: Scalar>(p: &FuzzyIdeal<V>, grid: &ValueGrid<V>) -> Result<Vec<(usize, (V, FuzzyIdeal<V>))>> {
    let n = p.ring().require_table("singleton searches")?.size();
    let mut out = Vec::new();
    for x in 0..n {
        if let Some(t) = grid.next_above(p.value_at(x)) {
            out.push((x, (t.clone(), point_ideal(p.ring(), &Element::Index(x), t)?)));
        }
    }
    Ok(out)
}
