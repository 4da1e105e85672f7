use std::borrow::Cow;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ElementLiteral, Ring};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Rings up to this size verify associativity and distributivity on every
/// triple; larger rings check a fixed-seed sample.
pub(crate) const EXHAUSTIVE_AXIOM_LIMIT: usize = 64;
pub(crate) const AXIOM_SAMPLES: usize = 10_000;
const AXIOM_SEED: u64 = 0x0005_eed0_fa11;

/// Sandwich sets `xRy` are cached for rings up to this size.
const SANDWICH_CACHE_LIMIT: usize = 256;

/// A finite unital ring given by its operation tables.
pub struct TableRing {
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    commutative: bool,
    layout: Layout,
    pub(crate) cache: TableCache,
}

pub(crate) struct TableCache {
    pub principal: Vec<OnceLock<ElementSet>>,
    pub ideals: OnceLock<Vec<ElementSet>>,
    pub sandwich: OnceLock<Vec<ElementSet>>,
}

impl TableCache {
    fn new(size: usize) -> Self {
        TableCache {
            principal: (0..size).map(|_| OnceLock::new()).collect(),
            ideals: OnceLock::new(),
            sandwich: OnceLock::new(),
        }
    }
}

/// How element indices map to written literals.
pub(crate) enum Layout {
    Residues { modulus: u64 },
    Matrix { dim: usize, base: Ring, positions: Vec<(usize, usize)> },
    Product { factors: Vec<Ring> },
    Quotient { base: Ring, reps: Vec<usize>, projection: Vec<usize> },
}

impl TableRing {
    pub(crate) fn from_tables(
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        layout: Layout,
    ) -> Result<Self> {
        let size = (add.len() as f64).sqrt() as usize;
        if size * size != add.len() || mul.len() != add.len() {
            return Err(Error::RingAxiom("tables are not square".into()));
        }
        if size < 2 {
            return Err(Error::RingAxiom("the zero ring has no unity distinct from zero".into()));
        }
        let mut neg = vec![u32::MAX; size];
        for a in 0..size {
            for b in 0..size {
                if add[a * size + b] as usize == zero {
                    neg[a] = b as u32;
                    break;
                }
            }
            if neg[a] == u32::MAX {
                return Err(Error::RingAxiom(format!("element {a} has no additive inverse")));
            }
        }
        let commutative = (0..size).all(|a| (a..size).all(|b| mul[a * size + b] == mul[b * size + a]));
        let ring = TableRing { size, add, mul, neg, zero, one, commutative, layout, cache: TableCache::new(size) };
        ring.verify_axioms()?;
        Ok(ring)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub(crate) fn layout(&self) -> &Layout {
        &self.layout
    }

    /// The set `xRy = { x r y : r in R }`.
    pub fn sandwich(&self, x: usize, y: usize) -> Cow<'_, ElementSet> {
        if self.size <= SANDWICH_CACHE_LIMIT {
            let all = self.cache.sandwich.get_or_init(|| {
                let mut out = Vec::with_capacity(self.size * self.size);
                for x in 0..self.size {
                    for y in 0..self.size {
                        out.push(self.compute_sandwich(x, y));
                    }
                }
                out
            });
            Cow::Borrowed(&all[x * self.size + y])
        } else {
            Cow::Owned(self.compute_sandwich(x, y))
        }
    }

    fn compute_sandwich(&self, x: usize, y: usize) -> ElementSet {
        ElementSet::from_indices(self.size, (0..self.size).map(|r| self.mul(self.mul(x, r), y)))
    }

    /// Checks all ring axioms: exhaustively on pairs, and on triples up to
    /// [`EXHAUSTIVE_AXIOM_LIMIT`] elements (sampled above that).
    pub fn verify_axioms(&self) -> Result<()> {
        let n = self.size;
        let fail = |what: &str, xs: &[usize]| Err(Error::RingAxiom(format!("{what} fails at {xs:?}")));
        if self.zero == self.one {
            return fail("0 != 1", &[self.zero]);
        }
        for a in 0..n {
            if self.add(a, self.zero) != a || self.add(self.zero, a) != a {
                return fail("additive identity", &[a]);
            }
            if self.add(a, self.neg(a)) != self.zero {
                return fail("additive inverse", &[a]);
            }
            if self.mul(a, self.one) != a || self.mul(self.one, a) != a {
                return fail("multiplicative identity", &[a]);
            }
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", &[a, b]);
                }
            }
        }
        let check_triple = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail("additive associativity", &[a, b, c]);
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail("multiplicative associativity", &[a, b, c]);
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail("left distributivity", &[a, b, c]);
            }
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                return fail("right distributivity", &[a, b, c]);
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_AXIOM_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check_triple(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(AXIOM_SEED);
            for _ in 0..AXIOM_SAMPLES {
                check_triple(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }
}

impl Layout {
    pub(crate) fn literal(&self, i: usize) -> ElementLiteral {
        match self {
            Layout::Residues { .. } => ElementLiteral::Integer(BigInt::from(i)),
            Layout::Matrix { dim, base, positions } => {
                let digits = matrix_digits(i, base_size(base), positions.len());
                let zero = base.table().expect("table base").zero();
                let mut rows = vec![vec![zero; *dim]; *dim];
                for (&(r, c), d) in positions.iter().zip(digits) {
                    rows[r][c] = d;
                }
                let base_table = base.table().expect("table base");
                ElementLiteral::Matrix(
                    rows.into_iter()
                        .map(|row| row.into_iter().map(|e| base_table.layout.literal(e)).collect())
                        .collect(),
                )
            }
            Layout::Product { factors } => {
                let sizes: Vec<usize> = factors.iter().map(base_size).collect();
                let parts = mixed_radix_digits(i, &sizes);
                ElementLiteral::Tuple(
                    factors
                        .iter()
                        .zip(parts)
                        .map(|(f, p)| f.table().expect("table factor").layout.literal(p))
                        .collect(),
                )
            }
            Layout::Quotient { base, reps, .. } => {
                base.table().expect("table base").layout.literal(reps[i])
            }
        }
    }

    pub(crate) fn index_of(&self, lit: &ElementLiteral) -> Result<usize> {
        let mismatch = |expected: &str| Err(Error::ElementOutOfRange(format!("expected {expected}, found {lit}")));
        match self {
            Layout::Residues { modulus } => match lit {
                ElementLiteral::Integer(n) => {
                    let m = BigInt::from(*modulus);
                    let r = ((n % &m) + &m) % &m;
                    Ok(r.to_usize().expect("residue fits"))
                }
                _ => mismatch("an integer"),
            },
            Layout::Matrix { dim, base, positions } => {
                let ElementLiteral::Matrix(rows) = lit else {
                    return mismatch(&format!("a {dim}x{dim} matrix"));
                };
                if rows.len() != *dim || rows.iter().any(|r| r.len() != *dim) {
                    return mismatch(&format!("a {dim}x{dim} matrix"));
                }
                let table = base.table().expect("table base");
                let mut entries = vec![vec![0usize; *dim]; *dim];
                for (r, row) in rows.iter().enumerate() {
                    for (c, e) in row.iter().enumerate() {
                        entries[r][c] = table.layout.index_of(e)?;
                    }
                }
                let upper = positions.len() < dim * dim;
                if upper {
                    for (r, row) in entries.iter().enumerate() {
                        for (c, &e) in row.iter().enumerate() {
                            if c < r && e != table.zero() {
                                return Err(Error::ElementOutOfRange(format!(
                                    "entry ({r},{c}) below the diagonal of {lit} must be zero"
                                )));
                            }
                        }
                    }
                }
                let b = table.size();
                Ok(positions.iter().fold(0, |acc, &(r, c)| acc * b + entries[r][c]))
            }
            Layout::Product { factors } => {
                let ElementLiteral::Tuple(items) = lit else {
                    return mismatch(&format!("a {}-tuple", factors.len()));
                };
                if items.len() != factors.len() {
                    return mismatch(&format!("a {}-tuple", factors.len()));
                }
                let mut acc = 0;
                for (f, item) in factors.iter().zip(items) {
                    let t = f.table().expect("table factor");
                    acc = acc * t.size() + t.layout.index_of(item)?;
                }
                Ok(acc)
            }
            Layout::Quotient { base, projection, .. } => {
                let b = base.table().expect("table base").layout.index_of(lit)?;
                Ok(projection[b])
            }
        }
    }
}

fn base_size(r: &Ring) -> usize {
    r.size().expect("table ring")
}

/// Digits of `i` in base `b`, most significant first, padded to `len`.
pub(crate) fn matrix_digits(mut i: usize, b: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = i % b;
        i /= b;
    }
    out
}

/// Mixed-radix digits of `i`, first radix most significant.
pub(crate) fn mixed_radix_digits(mut i: usize, radices: &[usize]) -> Vec<usize> {
    let mut out = vec![0; radices.len()];
    for (slot, &r) in out.iter_mut().zip(radices).rev() {
        *slot = i % r;
        i /= r;
    }
    out
}
