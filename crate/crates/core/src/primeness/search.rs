//! Searches over fuzzy ideals whose values lie in a value grid.
//!
//! A grid-valued fuzzy ideal is a chain of ideals together with strictly
//! decreasing grid values. The searches work on grid ranks, so comparing
//! two values is an integer comparison.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::corpus::{combinations, ideal_chains};
use crate::error::Result;
use crate::fuzzy::FuzzyIdeal;
use crate::grid::ValueGrid;
use crate::ring::TableRing;
use crate::scalar::Scalar;
use crate::set::ElementSet;

use super::Witness;

/// Ranks of `p`'s values in `grid`, per element.
fn ranks_of<V: Scalar>(p: &FuzzyIdeal<V>, grid: &ValueGrid<V>) -> Vec<u16> {
    let level_rank: Vec<u16> =
        p.image().map(|v| grid.rank(v).expect("grid covers the image") as u16).collect();
    p.level_table().iter().map(|&l| level_rank[l as usize]).collect()
}

/// A grid-valued fuzzy ideal during a search.
pub(crate) struct GridIdeal<'a> {
    pub chain: &'a [crate::ideal::CrispIdeal],
    /// Grid ranks of the chain values, strongest level first.
    pub values: Vec<u16>,
    pub ranks: &'a [u16],
}

impl GridIdeal<'_> {
    pub fn build<V: Scalar>(&self, p: &FuzzyIdeal<V>, grid: &ValueGrid<V>) -> FuzzyIdeal<V> {
        let levels = self
            .chain
            .iter()
            .cloned()
            .zip(self.values.iter().map(|&r| grid.values()[r as usize].clone()))
            .collect();
        FuzzyIdeal::from_chain(p.ring(), levels).expect("grid chains are valid")
    }
}

/// Calls `f` on every fuzzy ideal with values in `grid`, constant ones
/// included, chains in corpus order and values lexicographically from the top.
pub(crate) fn for_each_grid_ideal<V: Scalar, B>(
    p: &FuzzyIdeal<V>,
    grid: &ValueGrid<V>,
    mut f: impl FnMut(&GridIdeal<'_>) -> ControlFlow<B>,
) -> Result<Option<B>> {
    let t = p.ring().require_table("grid searches")?;
    let g = grid.len();
    let chains = ideal_chains(p.ring(), None, g)?;
    let mut ranks = vec![0u16; t.size()];
    for chain in &chains {
        let level_of: Vec<usize> = (0..t.size())
            .map(|z| chain.iter().position(|c| c.as_set().expect("table").contains(z)).expect("ends at R"))
            .collect();
        for choice in combinations(g, chain.len()) {
            // choice ascends in index; values must descend with the level
            let values: Vec<u16> = choice.iter().map(|&i| (g - 1 - i) as u16).collect();
            for (z, &l) in level_of.iter().enumerate() {
                ranks[z] = values[l];
            }
            if let ControlFlow::Break(b) = f(&GridIdeal { chain, values, ranks: &ranks }) {
                return Ok(Some(b));
            }
        }
    }
    Ok(None)
}

fn le_ranks(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `(I∘J)(z) <= P(z)` everywhere, on ranks.
fn compose_below(t: &TableRing, i: &[u16], j: &[u16], p: &[u16]) -> bool {
    let n = t.size();
    (0..n).all(|x| (0..n).all(|y| i[x].min(j[y]) <= p[t.mul(x, y)]))
}

/// SD1 over grid-valued ideals: an `I` with `I∘I <= P` (so `I² <= P`, as
/// `P` is an ideal) and `I` not below `P`.
pub(crate) fn sd1_grid_search<V: Scalar>(p: &FuzzyIdeal<V>) -> Result<Option<Witness<V>>> {
    let t = p.ring().require_table("SD1")?;
    let grid = ValueGrid::for_ideal(p);
    let rp = ranks_of(p, &grid);
    for_each_grid_ideal(p, &grid, |i| {
        if !le_ranks(i.ranks, &rp) && compose_below(t, i.ranks, i.ranks, &rp) {
            ControlFlow::Break(Witness::Ideal(i.build(p, &grid)))
        } else {
            ControlFlow::Continue(())
        }
    })
}

/// Outcome of [`d1_falsify_search`].
#[derive(Clone, Debug)]
pub struct D1Search<V: Scalar = crate::Membership> {
    /// `(I, J)` with `I∘J <= P` and neither below `P`.
    pub witness: Option<(FuzzyIdeal<V>, FuzzyIdeal<V>)>,
    /// Pairs examined.
    pub examined: usize,
    /// The budget ran out before the search finished.
    pub exhausted: bool,
}

/// Looks for pairs of grid-valued fuzzy ideals refuting D1, examining at
/// most `budget` pairs. Ideals below `P` are skipped, as they cannot refute.
pub fn d1_falsify_search<V: Scalar>(p: &FuzzyIdeal<V>, grid: &ValueGrid<V>, budget: usize) -> Result<D1Search<V>> {
    p.ensure_nonconstant()?;
    let t = p.ring().require_table("D1 search")?;
    let grid = grid.covering(p);
    let rp = ranks_of(p, &grid);
    let mut candidates: Vec<(Vec<u16>, FuzzyIdeal<V>)> = Vec::new();
    for_each_grid_ideal::<V, ()>(p, &grid, |i| {
        if !le_ranks(i.ranks, &rp) {
            candidates.push((i.ranks.to_vec(), i.build(p, &grid)));
        }
        ControlFlow::Continue(())
    })?;
    let mut examined = 0;
    for (ri, i) in &candidates {
        for (rj, j) in &candidates {
            if examined == budget {
                return Ok(D1Search { witness: None, examined, exhausted: true });
            }
            examined += 1;
            if compose_below(t, ri, rj, &rp) {
                return Ok(D1Search { witness: Some((i.clone(), j.clone())), examined, exhausted: false });
            }
        }
    }
    Ok(D1Search { witness: None, examined, exhausted: false })
}

/// The grid form of the ideal characterizations: for every grid-valued `I`,
/// with `L = { z : I(z) <= P(z) }`, no `x, y` outside `L` have `xRy ⊆ L`
/// (`y = x` only, when `semiprime`). Returns a refuting `I` with `x, y`.
#[allow(clippy::type_complexity)]
pub(crate) fn grid_characterization<V: Scalar>(
    p: &FuzzyIdeal<V>,
    semiprime: bool,
) -> Result<Option<(FuzzyIdeal<V>, usize, usize)>> {
    let t = p.ring().require_table("the grid characterization")?;
    let n = t.size();
    let grid = ValueGrid::for_ideal(p);
    let rp = ranks_of(p, &grid);
    let mut seen: HashSet<ElementSet> = HashSet::new();
    for_each_grid_ideal(p, &grid, |i| {
        let below = ElementSet::from_indices(n, (0..n).filter(|&z| i.ranks[z] <= rp[z]));
        if below.is_full() || !seen.insert(below.clone()) {
            return ControlFlow::Continue(());
        }
        for x in below.complement_iter() {
            let ys: Vec<usize> = if semiprime { vec![x] } else { below.complement_iter().collect() };
            for y in ys {
                if t.sandwich(x, y).is_subset(&below) {
                    return ControlFlow::Break((i.build(p, &grid), x, y));
                }
            }
        }
        ControlFlow::Continue(())
    })
}
