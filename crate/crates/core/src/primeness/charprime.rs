//! Cross-checks of the characterizations of prime and semiprime fuzzy ideals.

use crate::error::{Error, Result};
use crate::fuzzy::FuzzyIdeal;
use crate::ideal::{is_prime_ideal, is_semiprime_ideal, CrispIdeal};
use crate::ring::quotient_ring;
use crate::scalar::Scalar;

use super::notions::{is_d4, is_prime_new, is_semiprime_new};
use super::search::grid_characterization;

/// The four routes to primeness (or semiprimeness) of a fuzzy ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterizationReport {
    /// The pointwise sandwich condition.
    pub pointwise: bool,
    /// Every proper level cut is prime (semiprime).
    pub cuts: bool,
    /// The zero ideal of every quotient by a proper level cut is prime (semiprime).
    pub quotients: bool,
    /// The condition quantified over grid-valued fuzzy ideals.
    pub grid: bool,
    /// D4 (SD4), reported on commutative rings.
    pub d4: Option<bool>,
}

impl CharacterizationReport {
    pub fn agrees(&self) -> bool {
        let v = self.pointwise;
        self.cuts == v && self.quotients == v && self.grid == v && self.d4.is_none_or(|d| d == v)
    }
}

/// Evaluates the four characterizations of a prime fuzzy ideal and fails
/// when they disagree.
pub fn charprime_equivalence_check<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<CharacterizationReport> {
    check(p, false)
}

/// The semiprime analogue of [`charprime_equivalence_check`].
pub fn charsemi_equivalence_check<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<CharacterizationReport> {
    check(p, true)
}

fn check<V: Scalar>(p: &FuzzyIdeal<V>, semiprime: bool) -> Result<CharacterizationReport> {
    p.ensure_nonconstant()?;
    let ring = p.ring();
    ring.require_table("the characterization check")?;
    let crisp = |r: &crate::ring::Ring, i: &CrispIdeal| {
        if semiprime {
            is_semiprime_ideal(r, i)
        } else {
            is_prime_ideal(r, i)
        }
    };
    let proper = &p.levels()[..p.num_levels() - 1];
    let mut cuts = true;
    let mut quotients = true;
    for (c, _) in proper {
        cuts &= crisp(ring, c)?;
        let q = quotient_ring(ring, c)?;
        quotients &= crisp(&q, &CrispIdeal::zero(&q))?;
    }
    let report = CharacterizationReport {
        pointwise: if semiprime { is_semiprime_new(p)? } else { is_prime_new(p)? },
        cuts,
        quotients,
        grid: grid_characterization(p, semiprime)?.is_none(),
        d4: if ring.is_commutative() {
            Some(if semiprime { super::notions::is_sd4(p)? } else { is_d4(p)? })
        } else {
            None
        },
    };
    if report.agrees() {
        Ok(report)
    } else {
        Err(Error::CheckFailed(format!("characterizations disagree for {p:?}: {report:?}")))
    }
}
