//! Exhaustive and sampled families of fuzzy ideals with values from a palette.
//!
//! A member is a strict chain of ideals ending at the ring together with a
//! strictly decreasing choice of palette values, one per level. Members are
//! ordered by chain (depth-first from the whole ring, in ideal enumeration
//! order), then by value choice in lexicographic order.

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fuzzy::FuzzyIdeal;
use crate::ideal::{enumerate_ideals, CrispIdeal};
use crate::ring::Ring;
use crate::scalar::Scalar;

pub const DEFAULT_CORPUS_CAP: usize = 100_000;

/// `{1, 3/4, 1/2, 1/4, 0}`.
pub fn default_palette<V: Scalar>() -> Vec<V> {
    let one = V::one();
    let two = one.clone() + one.clone();
    let four = two.clone() * two.clone();
    let three = two.clone() + one.clone();
    vec![one.clone(), three / four.clone(), one.clone() / two, one / four, V::zero()]
}

/// Sorts a palette into strictly decreasing order.
fn normalize_palette<V: Scalar>(palette: &[V]) -> Result<Vec<V>> {
    let mut p = palette.to_vec();
    for v in &p {
        if !v.in_unit_interval() {
            return Err(Error::ValueOutOfRange(v.to_string()));
        }
    }
    crate::grid::sort_dedup(&mut p);
    p.reverse();
    Ok(p)
}

/// The ideals eligible for chains: all ideals of a table ring, or `nZ` with
/// `n <= bound` for the integers.
fn chain_ideals(ring: &Ring, bound: Option<u64>) -> Result<Vec<CrispIdeal>> {
    if ring.is_integers() && bound.is_none() {
        return Err(Error::Precondition("chains over Z need a generator bound".into()));
    }
    let mut ideals = enumerate_ideals(ring, bound)?;
    let whole = ideals.iter().position(|i| i.is_whole(ring)).expect("the ring is an ideal");
    let whole = ideals.remove(whole);
    ideals.push(whole);
    Ok(ideals)
}

/// Strict chains `C1 ⊂ ... ⊂ Cm = R` with at most `max_len` levels, listed
/// bottom first.
pub fn ideal_chains(ring: &Ring, bound: Option<u64>, max_len: usize) -> Result<Vec<Vec<CrispIdeal>>> {
    let ideals = chain_ideals(ring, bound)?;
    let below = strict_below(&ideals);
    let mut out = Vec::new();
    let mut stack = vec![ideals.len() - 1];
    extend_chains(&ideals, &below, &mut stack, max_len, &mut out);
    Ok(out)
}

fn strict_below(ideals: &[CrispIdeal]) -> Vec<Vec<usize>> {
    ideals
        .iter()
        .map(|b| (0..ideals.len()).filter(|&a| ideals[a].is_proper_subset(b)).collect())
        .collect()
}

fn extend_chains(
    ideals: &[CrispIdeal],
    below: &[Vec<usize>],
    stack: &mut Vec<usize>,
    max_len: usize,
    out: &mut Vec<Vec<CrispIdeal>>,
) {
    out.push(stack.iter().rev().map(|&i| ideals[i].clone()).collect());
    if stack.len() == max_len {
        return;
    }
    let last = *stack.last().expect("nonempty");
    for &a in &below[last] {
        stack.push(a);
        extend_chains(ideals, below, stack, max_len, out);
        stack.pop();
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Number of non-constant members, computed without listing chains.
pub fn corpus_size<V: Scalar>(ring: &Ring, palette: &[V], bound: Option<u64>) -> Result<BigUint> {
    let palette = normalize_palette(palette)?;
    let ideals = chain_ideals(ring, bound)?;
    let below = strict_below(&ideals);
    let top = ideals.len() - 1;
    let k = palette.len();
    // ending[i][len]: chains from the whole ring down to ideal i with len levels
    let mut ending = vec![vec![BigUint::from(0u32); k + 1]; ideals.len()];
    if k >= 1 {
        ending[top][1] = BigUint::from(1u32);
    }
    let mut order: Vec<usize> = (0..ideals.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(below[i].len()));
    for &b in &order {
        for len in 1..k {
            if ending[b][len] == BigUint::from(0u32) {
                continue;
            }
            let c = ending[b][len].clone();
            for &a in &below[b] {
                ending[a][len + 1] += &c;
            }
        }
    }
    let mut total = BigUint::from(0u32);
    for row in &ending {
        for (len, c) in row.iter().enumerate().skip(2) {
            total += c * binomial(k, len);
        }
    }
    Ok(total)
}

/// Strictly increasing index choices of size `k` from `0..n`, lexicographic.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn member<V: Scalar>(ring: &Ring, chain: &[CrispIdeal], palette: &[V], choice: &[usize]) -> FuzzyIdeal<V> {
    let levels = chain.iter().cloned().zip(choice.iter().map(|&i| palette[i].clone())).collect();
    FuzzyIdeal::from_chain(ring, levels).expect("chains and decreasing palettes give valid ideals")
}

/// Every fuzzy ideal with values from `values` (constant ones included when
/// asked), in corpus order.
pub fn valued_ideals<V: Scalar>(
    ring: &Ring,
    values: &[V],
    bound: Option<u64>,
    include_constant: bool,
) -> Result<Vec<FuzzyIdeal<V>>> {
    let palette = normalize_palette(values)?;
    let chains = ideal_chains(ring, bound, palette.len())?;
    let mut out = Vec::new();
    for chain in &chains {
        if chain.len() == 1 && !include_constant {
            continue;
        }
        for choice in combinations(palette.len(), chain.len()) {
            out.push(member(ring, chain, &palette, &choice));
        }
    }
    Ok(out)
}

/// All non-constant members, refusing to exceed `cap`.
pub fn exhaustive_corpus<V: Scalar>(
    ring: &Ring,
    palette: &[V],
    bound: Option<u64>,
    cap: usize,
) -> Result<Vec<FuzzyIdeal<V>>> {
    let size = corpus_size(ring, palette, bound)?;
    if size > BigUint::from(cap) {
        return Err(Error::CorpusTooLarge { count: size.to_string(), cap });
    }
    valued_ideals(ring, palette, bound, false)
}

/// `count` distinct members drawn uniformly with a seeded generator, listed
/// in corpus order. Returns the whole corpus when it is not larger than `count`.
pub fn random_corpus<V: Scalar>(
    ring: &Ring,
    palette: &[V],
    bound: Option<u64>,
    seed: u64,
    count: usize,
) -> Result<Vec<FuzzyIdeal<V>>> {
    let palette = normalize_palette(palette)?;
    let size = corpus_size(ring, &palette, bound)?;
    let total: usize = match usize::try_from(&size) {
        Ok(t) if t <= count => return valued_ideals(ring, &palette, bound, false),
        Ok(t) => t,
        Err(_) => return Err(Error::CorpusTooLarge { count: size.to_string(), cap: usize::MAX }),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picks = rand::seq::index::sample(&mut rng, total, count).into_vec();
    picks.sort_unstable();
    let chains = ideal_chains(ring, bound, palette.len())?;
    let k = palette.len();
    let mut out = Vec::with_capacity(count);
    let mut picks = picks.into_iter().peekable();
    let mut offset = 0usize;
    for chain in chains.iter().filter(|c| c.len() >= 2) {
        let block: usize = usize::try_from(binomial(k, chain.len())).expect("fits");
        while let Some(&p) = picks.peek() {
            if p >= offset + block {
                break;
            }
            let choice = unrank_combination(k, chain.len(), p - offset);
            out.push(member(ring, chain, &palette, &choice));
            picks.next();
        }
        offset += block;
    }
    Ok(out)
}

/// Ordered index pairs `(i, j)` over `0..n`: all `n²` of them when that
/// is at most `cap`, otherwise `cap` distinct pairs drawn with a seeded
/// generator. Sorted either way.
pub fn sample_pairs(n: usize, cap: usize, seed: u64) -> Vec<(usize, usize)> {
    let total = n * n;
    if total <= cap {
        return (0..total).map(|k| (k / n, k % n)).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picks = rand::seq::index::sample(&mut rng, total, cap).into_vec();
    picks.sort_unstable();
    picks.into_iter().map(|k| (k / n, k % n)).collect()
}

/// The `rank`-th strictly increasing `k`-subset of `0..n` in lexicographic order.
fn unrank_combination(n: usize, k: usize, mut rank: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut start = 0;
    for slot in 0..k {
        for i in start..n {
            let rest: usize = usize::try_from(binomial(n - i - 1, k - slot - 1)).expect("fits");
            if rank < rest {
                out.push(i);
                start = i + 1;
                break;
            }
            rank -= rest;
        }
    }
    out
}
