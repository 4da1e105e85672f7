use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::table::{matrix_digits, mixed_radix_digits, Layout, TableRing};
use super::{IdealSpec, QuotientMap, Ring, RingKind, RingSpec};
use crate::error::{Error, Result};
use crate::ideal::{canonical_generators, ideal_generate, CrispIdeal};


/// Largest table ring built unless a caller raises the limit.
pub const DEFAULT_SIZE_LIMIT: usize = 4096;

pub fn build_ring(spec: &RingSpec) -> Result<Ring> {
    build_ring_with_limit(spec, DEFAULT_SIZE_LIMIT)
}

/// Instantiates `spec`. Elements are enumerated canonically: residues
/// ascending, matrices in row-major lexicographic order of their entries,
/// tuples lexicographically, cosets by their least representative.
pub fn build_ring_with_limit(spec: &RingSpec, limit: usize) -> Result<Ring> {
    match spec {
        RingSpec::Integers => Ok(Ring::integers()),
        RingSpec::Residues(n) => {
            if *n < 2 {
                return Err(Error::InvalidSpec(format!("Zn requires n >= 2, got {n}")));
            }
            let size = check_size(BigUint::from(*n), limit)?;
            table_ring(spec.clone(), residue_tables(size), Layout::Residues { modulus: *n }, None)
        }
        RingSpec::Matrix { dim, base } | RingSpec::UpperTriangular { dim, base } => {
            let upper = matches!(spec, RingSpec::UpperTriangular { .. });
            if *dim == 0 {
                return Err(Error::InvalidSpec("matrix dimension must be at least 1".into()));
            }
            let base = build_ring_with_limit(base, limit)?;
            if base.is_integers() {
                return Err(Error::InvalidSpec("matrix rings need a finite base ring".into()));
            }
            let positions: Vec<(usize, usize)> = (0..*dim)
                .flat_map(|r| (0..*dim).map(move |c| (r, c)))
                .filter(|&(r, c)| !upper || r <= c)
                .collect();
            let b = base.size().expect("table");
            check_size(BigUint::from(b).pow(positions.len() as u32), limit)?;
            let tables = matrix_tables(&base, *dim, &positions);
            table_ring(spec.clone(), tables, Layout::Matrix { dim: *dim, base, positions }, None)
        }
        RingSpec::Product(factors) => {
            if factors.len() < 2 {
                return Err(Error::InvalidSpec("Prod needs at least two factors".into()));
            }
            let rings = factors.iter().map(|f| build_ring_with_limit(f, limit)).collect::<Result<Vec<_>>>()?;
            if rings.iter().any(Ring::is_integers) {
                return Err(Error::InvalidSpec("products need finite factors".into()));
            }
            let total = rings.iter().fold(BigUint::one(), |acc, r| acc * r.size().expect("table"));
            check_size(total, limit)?;
            let tables = product_tables(&rings);
            table_ring(spec.clone(), tables, Layout::Product { factors: rings }, None)
        }
        RingSpec::Quotient { base, ideal } => {
            let base_ring = build_ring_with_limit(base, limit)?;
            let gens = match ideal {
                IdealSpec::Whole => {
                    return Err(Error::InvalidSpec("quotient by the whole ring is the zero ring".into()))
                }
                IdealSpec::Generators(lits) => lits
                    .iter()
                    .map(|l| base_ring.element_from_literal(l))
                    .collect::<Result<Vec<_>>>()
                    .map_err(|e| Error::InvalidSpec(e.to_string()))?,
            };
            let ideal = ideal_generate(&base_ring, &gens)?;
            quotient_with_spec(&base_ring, &ideal, spec.clone(), limit)
        }
    }
}

/// `R / I` as a table ring. Cosets are listed by their least
/// representative; [`Ring::project`] gives the natural projection.
pub fn quotient_ring(ring: &Ring, ideal: &CrispIdeal) -> Result<Ring> {
    let gens = canonical_generators(ring, ideal, None)?;
    let lits = gens.iter().map(|g| ring.literal(g)).collect::<Result<Vec<_>>>()?;
    let spec = RingSpec::quot(ring.spec().clone(), IdealSpec::Generators(lits));
    quotient_with_spec(ring, ideal, spec, usize::MAX)
}

fn quotient_with_spec(ring: &Ring, ideal: &CrispIdeal, spec: RingSpec, limit: usize) -> Result<Ring> {
    if ideal.is_whole(ring) {
        return Err(Error::InvalidSpec("quotient by the whole ring is the zero ring".into()));
    }
    match ring.kind() {
        RingKind::Integers => {
            let n = ideal.generator().expect("integer ideal");
            if n.is_zero() {
                return Err(Error::InvalidSpec("Z modulo the zero ideal is infinite".into()));
            }
            let size = check_size(n.clone(), limit)?;
            let modulus = n.to_u64().expect("bounded by limit");
            table_ring(
                spec,
                residue_tables(size),
                Layout::Residues { modulus },
                Some(QuotientMap::FromIntegers { modulus }),
            )
        }
        RingKind::Table(t) => {
            let set = ideal.as_set().expect("table ideal");
            let n = t.size();
            let mut projection = vec![usize::MAX; n];
            let mut reps = Vec::new();
            for x in 0..n {
                if projection[x] != usize::MAX {
                    continue;
                }
                let c = reps.len();
                reps.push(x);
                for i in set.iter() {
                    projection[t.add(x, i)] = c;
                }
            }
            let m = reps.len();
            let mut add = vec![0u32; m * m];
            let mut mul = vec![0u32; m * m];
            for a in 0..m {
                for b in 0..m {
                    add[a * m + b] = projection[t.add(reps[a], reps[b])] as u32;
                    mul[a * m + b] = projection[t.mul(reps[a], reps[b])] as u32;
                }
            }
            let zero = projection[t.zero()];
            let one = projection[t.one()];
            let layout = Layout::Quotient { base: ring.clone(), reps, projection: projection.clone() };
            let quotient = QuotientMap::FromTable { base: ring.clone(), projection };
            let table = TableRing::from_tables(add, mul, zero, one, layout)?;
            Ok(Ring::new(spec, RingKind::Table(table), Some(quotient)))
        }
    }
}

fn check_size(size: BigUint, limit: usize) -> Result<usize> {
    match size.to_usize() {
        Some(s) if s <= limit => Ok(s),
        _ => Err(Error::SizeLimit { size: size.to_string(), limit }),
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    zero: usize,
    one: usize,
}

fn table_ring(spec: RingSpec, t: Tables, layout: Layout, quotient: Option<QuotientMap>) -> Result<Ring> {
    let table = TableRing::from_tables(t.add, t.mul, t.zero, t.one, layout)?;
    Ok(Ring::new(spec, RingKind::Table(table), quotient))
}

fn residue_tables(n: usize) -> Tables {
    let mut add = vec![0u32; n * n];
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            add[a * n + b] = ((a + b) % n) as u32;
            mul[a * n + b] = ((a as u128 * b as u128) % n as u128) as u32;
        }
    }
    Tables { add, mul, zero: 0, one: 1 }
}

fn matrix_tables(base: &Ring, dim: usize, positions: &[(usize, usize)]) -> Tables {
    let bt = base.table().expect("table base");
    let b = bt.size();
    let e = positions.len();
    let size = b.pow(e as u32);
    let dense: Vec<Vec<usize>> = (0..size)
        .map(|i| {
            let mut m = vec![bt.zero(); dim * dim];
            for (&(r, c), d) in positions.iter().zip(matrix_digits(i, b, e)) {
                m[r * dim + c] = d;
            }
            m
        })
        .collect();
    let encode = |m: &[usize]| positions.iter().fold(0usize, |acc, &(r, c)| acc * b + m[r * dim + c]);
    let mut add = vec![0u32; size * size];
    let mut mul = vec![0u32; size * size];
    let mut scratch = vec![0usize; dim * dim];
    for x in 0..size {
        for y in 0..size {
            let (p, q) = (&dense[x], &dense[y]);
            for k in 0..dim * dim {
                scratch[k] = bt.add(p[k], q[k]);
            }
            add[x * size + y] = encode(&scratch) as u32;
            for r in 0..dim {
                for c in 0..dim {
                    let mut acc = bt.zero();
                    for k in 0..dim {
                        acc = bt.add(acc, bt.mul(p[r * dim + k], q[k * dim + c]));
                    }
                    scratch[r * dim + c] = acc;
                }
            }
            mul[x * size + y] = encode(&scratch) as u32;
        }
    }
    let mut identity = vec![bt.zero(); dim * dim];
    for d in 0..dim {
        identity[d * dim + d] = bt.one();
    }
    Tables { add, mul, zero: encode(&vec![bt.zero(); dim * dim]), one: encode(&identity) }
}

fn product_tables(factors: &[Ring]) -> Tables {
    let tables: Vec<&TableRing> = factors.iter().map(|f| f.table().expect("table")).collect();
    let radices: Vec<usize> = tables.iter().map(|t| t.size()).collect();
    let size: usize = radices.iter().product();
    let digits: Vec<Vec<usize>> = (0..size).map(|i| mixed_radix_digits(i, &radices)).collect();
    let encode = |ds: &mut dyn Iterator<Item = usize>| -> usize {
        ds.zip(&radices).fold(0, |acc, (d, &r)| acc * r + d)
    };
    let mut add = vec![0u32; size * size];
    let mut mul = vec![0u32; size * size];
    for x in 0..size {
        for y in 0..size {
            let (p, q) = (&digits[x], &digits[y]);
            add[x * size + y] =
                encode(&mut tables.iter().enumerate().map(|(k, t)| t.add(p[k], q[k]))) as u32;
            mul[x * size + y] =
                encode(&mut tables.iter().enumerate().map(|(k, t)| t.mul(p[k], q[k]))) as u32;
        }
    }
    let zero = encode(&mut tables.iter().map(|t| t.zero()));
    let one = encode(&mut tables.iter().map(|t| t.one()));
    Tables { add, mul, zero, one }
}
