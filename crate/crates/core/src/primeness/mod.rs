//! Primeness and semiprimeness notions for fuzzy ideals.
//!
//! Every notion is decided by a search that returns a concrete witness when
//! the notion fails. Witnesses can be checked again with
//! [`Witness::recheck`], which evaluates the defining condition directly.

mod charprime;
mod diagram;
mod minimal;
mod notions;
mod search;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzyIdeal, FuzzyPoint};
use crate::ring::{Element, Ring};
use crate::scalar::{max_of, min_of, Scalar};
use crate::Membership;

pub use charprime::{charprime_equivalence_check, charsemi_equivalence_check, CharacterizationReport};
pub use diagram::{diagram_check, diagram_report, DiagramReport, EdgeKind, EdgeOutcome, EdgeStatus};
pub use minimal::{
    count_minimal_prime_classes, minimal_prime_below, prime_ring_bridge, semiprime_ring_bridge, BridgeReport,
};
pub use notions::{
    decide, is_d0, is_d0_prime, is_d1, is_d2, is_d3, is_d4, is_prime_new, is_sd0_prime, is_sd1, is_sd2, is_sd4,
    is_semiprime_new,
};
pub use search::{d1_falsify_search, D1Search};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Notion {
    D0,
    D0Prime,
    D1,
    D1L,
    D1R,
    D2,
    D3,
    D4,
    PrimeNew,
    /// Every proper level cut is completely prime.
    CpCuts,
    SD0Prime,
    SD1,
    SD2,
    SD4,
    SemiprimeNew,
    /// Every proper level cut is completely semiprime.
    CspCuts,
}

impl Notion {
    pub const ALL: [Notion; 16] = [
        Notion::D0,
        Notion::D0Prime,
        Notion::D1,
        Notion::D1L,
        Notion::D1R,
        Notion::D2,
        Notion::D3,
        Notion::D4,
        Notion::PrimeNew,
        Notion::CpCuts,
        Notion::SD0Prime,
        Notion::SD1,
        Notion::SD2,
        Notion::SD4,
        Notion::SemiprimeNew,
        Notion::CspCuts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Notion::D0 => "D0",
            Notion::D0Prime => "D0'",
            Notion::D1 => "D1",
            Notion::D1L => "D1L",
            Notion::D1R => "D1R",
            Notion::D2 => "D2",
            Notion::D3 => "D3",
            Notion::D4 => "D4",
            Notion::PrimeNew => "PRIME_NEW",
            Notion::CpCuts => "CP_CUTS",
            Notion::SD0Prime => "SD0'",
            Notion::SD1 => "SD1",
            Notion::SD2 => "SD2",
            Notion::SD4 => "SD4",
            Notion::SemiprimeNew => "SEMIPRIME_NEW",
            Notion::CspCuts => "CSP_CUTS",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|n| n.name() == name)
    }

    pub fn is_semiprime(self) -> bool {
        matches!(
            self,
            Notion::SD0Prime | Notion::SD1 | Notion::SD2 | Notion::SD4 | Notion::SemiprimeNew | Notion::CspCuts
        )
    }
}

impl fmt::Display for Notion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence that a notion fails.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness<V: Scalar = Membership> {
    /// Two elements violating a pointwise condition.
    Pair { x: Element, y: Element },
    /// One element violating a pointwise condition.
    Element { x: Element },
    /// A level cut `P_alpha` with `x` (and `y`) outside it violating a crisp
    /// condition; `y` is absent for semiprime conditions.
    Cut { alpha: V, x: Element, y: Option<Element> },
    /// Singletons `x_t`, `y_s` whose product lies below `P` while neither
    /// singleton does.
    Singletons { x: Element, t: V, y: Element, s: V },
    /// A singleton `x_t` with `⟨x_t⟩² <= P` and `x_t` not below `P`.
    Singleton { x: Element, t: V },
    /// A fuzzy ideal `I` with `I² <= P` and `I` not below `P`.
    Ideal(FuzzyIdeal<V>),
}

impl<V: Scalar> Witness<V> {
    /// Evaluates the defining condition of `notion` at this witness; `true`
    /// means the witness shows that `p` violates `notion`.
    pub fn recheck(&self, notion: Notion, p: &FuzzyIdeal<V>) -> Result<bool> {
        let ring = p.ring();
        use Notion::*;
        Ok(match (self, notion) {
            (Witness::Pair { x, y }, PrimeNew) => {
                sandwich_min(p, x, y)? > max_of(&p.value(x)?, &p.value(y)?)
            }
            (Witness::Pair { x, y }, D4) => {
                let xy = p.value(&ring.mul(x, y)?)?;
                xy != p.value(x)? && xy != p.value(y)?
            }
            (Witness::Element { x }, SemiprimeNew) => sandwich_min(p, x, x)? > p.value(x)?,
            (Witness::Element { x }, SD4) => p.value(&ring.mul(x, x)?)? != p.value(x)?,
            (Witness::Cut { alpha, x, y }, D2 | D3 | CpCuts | SD2 | CspCuts) => {
                let semiprime = matches!(notion, SD2 | CspCuts);
                if semiprime != y.is_none() || (notion == D3 && alpha != p.top()) {
                    return Ok(false);
                }
                if alpha <= p.bottom() || alpha > p.top() {
                    return Ok(false);
                }
                let cut = p.cut(alpha)?;
                let y = y.as_ref().unwrap_or(x);
                if cut.contains(x) || cut.contains(y) {
                    return Ok(false);
                }
                match notion {
                    CpCuts | CspCuts => cut.contains(&ring.mul(x, y)?),
                    _ => sandwich_inside(ring, &cut, x, y)?,
                }
            }
            (Witness::Singletons { x, t, y, s }, D0) => {
                unit_value(t)
                    && unit_value(s)
                    && *t > p.value(x)?
                    && *s > p.value(y)?
                    && min_of(t, s) <= p.value(&ring.mul(x, y)?)?
            }
            (Witness::Singletons { x, t, y, s }, D0Prime | D1 | D1L | D1R) => {
                if !(unit_value(t) && unit_value(s) && *t > p.value(x)? && *s > p.value(y)?) {
                    return Ok(false);
                }
                let a = point_ideal(ring, x, t)?;
                let b = point_ideal(ring, y, s)?;
                a.product_by_cuts(&b)?.le(p)?
            }
            (Witness::Singleton { x, t }, SD0Prime) => {
                if !(unit_value(t) && *t > p.value(x)?) {
                    return Ok(false);
                }
                let a = point_ideal(ring, x, t)?;
                a.product_by_cuts(&a)?.le(p)?
            }
            (Witness::Ideal(i), SD1) => i.product_by_cuts(i)?.le(p)? && !i.le(p)?,
            _ => false,
        })
    }

    /// A short rendering with elements in literal form.
    pub fn describe(&self, ring: &Ring) -> String {
        let e = |x: &Element| ring.display_element(x);
        match self {
            Witness::Pair { x, y } => format!("x = {}, y = {}", e(x), e(y)),
            Witness::Element { x } => format!("x = {}", e(x)),
            Witness::Cut { alpha, x, y: Some(y) } => format!("cut at {alpha}: x = {}, y = {}", e(x), e(y)),
            Witness::Cut { alpha, x, y: None } => format!("cut at {alpha}: x = {}", e(x)),
            Witness::Singletons { x, t, y, s } => format!("x = {}, t = {t}, y = {}, s = {s}", e(x), e(y)),
            Witness::Singleton { x, t } => format!("x = {}, t = {t}", e(x)),
            Witness::Ideal(i) => match crate::dsl::format_fuzzy(i) {
                Ok(text) => format!("I = {text}"),
                Err(_) => format!("I = {i:?}"),
            },
        }
    }
}

fn unit_value<V: Scalar>(v: &V) -> bool {
    *v > V::zero() && *v <= V::one()
}

/// `⟨x_t⟩`.
pub(crate) fn point_ideal<V: Scalar>(ring: &Ring, x: &Element, t: &V) -> Result<FuzzyIdeal<V>> {
    FuzzyIdeal::generated_by_point(ring, &FuzzyPoint::new(x.clone(), t.clone())?)
}

/// `min over r of P(xry)`. Over the integers this is `P(xy)`.
fn sandwich_min<V: Scalar>(p: &FuzzyIdeal<V>, x: &Element, y: &Element) -> Result<V> {
    let ring = p.ring();
    match ring.table() {
        None => p.value(&ring.mul(x, y)?),
        Some(t) => {
            let (x, y) = (x.index().expect("table element"), y.index().expect("table element"));
            ring.check(&Element::Index(x))?;
            ring.check(&Element::Index(y))?;
            let worst = t.sandwich(x, y).iter().map(|z| p.level_table()[z]).max().expect("0 lies in xRy");
            Ok(p.levels()[worst as usize].1.clone())
        }
    }
}

/// Whether `xRy` lies inside `cut`.
fn sandwich_inside(ring: &Ring, cut: &crate::ideal::CrispIdeal, x: &Element, y: &Element) -> Result<bool> {
    match ring.table() {
        None => Ok(cut.contains(&ring.mul(x, y)?)),
        Some(t) => {
            let (x, y) = (x.index().expect("table element"), y.index().expect("table element"));
            Ok(t.sandwich(x, y).is_subset(cut.as_set().expect("table ideal")))
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict<V: Scalar = Membership> {
    pub holds: bool,
    pub witness: Option<Witness<V>>,
}

/// Truth value of every notion for one fuzzy ideal, with a witness for each
/// failing notion.
#[derive(Clone, Debug, PartialEq)]
pub struct Classification<V: Scalar = Membership> {
    pub commutative: bool,
    pub verdicts: BTreeMap<Notion, Verdict<V>>,
}

impl<V: Scalar> Classification<V> {
    pub fn holds(&self, notion: Notion) -> bool {
        self.verdicts[&notion].holds
    }

    pub fn witness(&self, notion: Notion) -> Option<&Witness<V>> {
        self.verdicts[&notion].witness.as_ref()
    }
}

/// Decides every notion for `p`.
pub fn classify<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<Classification<V>> {
    p.ensure_nonconstant()?;
    let mut verdicts = BTreeMap::new();
    for notion in Notion::ALL {
        let witness = decide(notion, p)?;
        verdicts.insert(notion, Verdict { holds: witness.is_none(), witness });
    }
    if p.ring().is_commutative() && p.ring().table().is_some() {
        let literal = notions::d3_literal_holds(p)?;
        if literal != verdicts[&Notion::D3].holds {
            return Err(Error::CheckFailed(format!(
                "D3 by its defining condition ({literal}) disagrees with primeness of the top cut"
            )));
        }
    }
    Ok(Classification { commutative: p.ring().is_commutative(), verdicts })
}

#[cfg(test)]
mod tests;
