//! Minimal prime fuzzy ideals and the zero-type ring bridges.

use crate::corpus::default_palette;
use crate::error::{Error, Result};
use crate::fuzzy::FuzzyIdeal;
use crate::grid::ValueGrid;
use crate::ideal::{is_prime_ideal, is_semiprime_ideal, minimal_primes, CrispIdeal};
use crate::ring::Ring;
use crate::scalar::Scalar;

use super::notions::{is_prime_new, is_semiprime_new};

/// A minimal prime fuzzy ideal below the prime `q`: `q(0)` on a minimal
/// crisp prime inside `q_*`, `q(1)` elsewhere.
pub fn minimal_prime_below<V: Scalar>(q: &FuzzyIdeal<V>) -> Result<FuzzyIdeal<V>> {
    if !is_prime_new(q)? {
        return Err(Error::Precondition("minimal prime below a non-prime fuzzy ideal".into()));
    }
    let ring = q.ring();
    let m = minimal_primes(ring)?
        .into_iter()
        .find(|m| m.is_subset(q.top_cut()))
        .ok_or_else(|| Error::CheckFailed("no minimal prime inside the top cut".into()))?;
    let out = FuzzyIdeal::two_valued(ring, m.clone(), q.top().clone(), q.bottom().clone())?;
    let chi: FuzzyIdeal<V> = FuzzyIdeal::characteristic(ring, m)?;
    if !out.le(q)? || !is_prime_new(&out)? || !out.value_equivalent(&chi)? {
        return Err(Error::CheckFailed(format!("minimal prime construction fails for {q:?}")));
    }
    Ok(out)
}

/// Value-equivalence classes of minimal prime fuzzy ideals, one per
/// minimal crisp prime.
pub fn count_minimal_prime_classes(ring: &Ring) -> Result<usize> {
    Ok(minimal_primes(ring)?.len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeReport {
    /// The zero ideal is prime (semiprime).
    pub ring_level: bool,
    /// Every zero-type ideal over the default grid is prime (semiprime).
    pub zero_type_level: bool,
    pub pairs_checked: usize,
}

/// A ring is prime exactly when every zero-type fuzzy ideal is prime.
pub fn prime_ring_bridge(ring: &Ring) -> Result<BridgeReport> {
    bridge(ring, false)
}

/// A ring is semiprime exactly when every zero-type fuzzy ideal is semiprime.
pub fn semiprime_ring_bridge(ring: &Ring) -> Result<BridgeReport> {
    bridge(ring, true)
}

fn bridge(ring: &Ring, semiprime: bool) -> Result<BridgeReport> {
    let zero = CrispIdeal::zero(ring);
    if zero.is_whole(ring) {
        return Err(Error::NotProper("the zero ring has no proper ideals"));
    }
    let ring_level = if semiprime { is_semiprime_ideal(ring, &zero)? } else { is_prime_ideal(ring, &zero)? };
    let grid = ValueGrid::<crate::Membership>::from_base(default_palette())?;
    let mut zero_type_level = true;
    let mut pairs_checked = 0;
    for (s, t) in grid.ordered_pairs() {
        let p = FuzzyIdeal::zero_type(ring, t.clone(), s.clone())?;
        zero_type_level &= if semiprime { is_semiprime_new(&p)? } else { is_prime_new(&p)? };
        pairs_checked += 1;
    }
    let report = BridgeReport { ring_level, zero_type_level, pairs_checked };
    if ring_level == zero_type_level {
        Ok(report)
    } else {
        Err(Error::CheckFailed(format!("zero-type bridge fails on {}: {report:?}", ring.spec())))
    }
}
