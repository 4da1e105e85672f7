//! Canonical text for rings, ideals and fuzzy ideals.

use crate::error::Result;
use crate::fuzzy::FuzzyIdeal;
use crate::ideal::{canonical_generators, CrispIdeal};
use crate::ring::{IdealSpec, Ring, RingSpec};
use crate::scalar::Scalar;

pub fn format_ring_spec(spec: &RingSpec) -> String {
    spec.to_string()
}

/// `<g1, ..., gk>` generating `ideal` together with `base`; `<*>` for the ring.
pub fn format_ideal(ring: &Ring, ideal: &CrispIdeal, base: Option<&CrispIdeal>) -> Result<String> {
    if ideal.is_whole(ring) {
        return Ok(IdealSpec::Whole.to_string());
    }
    let gens = canonical_generators(ring, ideal, base)?;
    let lits = gens.iter().map(|g| ring.literal(g)).collect::<Result<Vec<_>>>()?;
    Ok(IdealSpec::Generators(lits).to_string())
}

/// `{v1: <...>, ..., vm: <*>}`, each level listing only the generators it
/// adds to the previous one.
pub fn format_fuzzy<V: Scalar>(f: &FuzzyIdeal<V>) -> Result<String> {
    let ring = f.ring();
    let mut parts = Vec::with_capacity(f.num_levels());
    let mut prev: Option<&CrispIdeal> = None;
    for (c, v) in f.levels() {
        parts.push(format!("{v}: {}", format_ideal(ring, c, prev)?));
        prev = Some(c);
    }
    Ok(format!("{{{}}}", parts.join(", ")))
}
