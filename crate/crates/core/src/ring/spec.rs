use std::fmt;

use num_bigint::BigInt;

/// Abstract syntax of a ring construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    /// The integers.
    Integers,
    /// Integers modulo `n`, `n >= 2`.
    Residues(u64),
    /// Full `k x k` matrices over a finite base ring.
    Matrix { dim: usize, base: Box<RingSpec> },
    /// Upper triangular `k x k` matrices over a finite base ring.
    UpperTriangular { dim: usize, base: Box<RingSpec> },
    /// Direct product of two or more rings.
    Product(Vec<RingSpec>),
    /// Quotient by the two-sided ideal generated by the given elements.
    Quotient { base: Box<RingSpec>, ideal: IdealSpec },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum IdealSpec {
    /// `<*>`, the whole ring.
    Whole,
    Generators(Vec<ElementLiteral>),
}

/// An element as written, before it is typed against a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ElementLiteral {
    Integer(BigInt),
    Matrix(Vec<Vec<ElementLiteral>>),
    Tuple(Vec<ElementLiteral>),
}

impl RingSpec {
    pub fn zn(n: u64) -> Self {
        RingSpec::Residues(n)
    }

    pub fn mat(dim: usize, base: RingSpec) -> Self {
        RingSpec::Matrix { dim, base: Box::new(base) }
    }

    pub fn tri(dim: usize, base: RingSpec) -> Self {
        RingSpec::UpperTriangular { dim, base: Box::new(base) }
    }

    pub fn quot(base: RingSpec, ideal: IdealSpec) -> Self {
        RingSpec::Quotient { base: Box::new(base), ideal }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Residues(n) => write!(f, "Zn({n})"),
            RingSpec::Matrix { dim, base } => write!(f, "Mat({dim}, {base})"),
            RingSpec::UpperTriangular { dim, base } => write!(f, "Tri({dim}, {base})"),
            RingSpec::Product(factors) => {
                write!(f, "Prod(")?;
                for (i, s) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ")")
            }
            RingSpec::Quotient { base, ideal } => write!(f, "Quot({base}, {ideal})"),
        }
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealSpec::Whole => write!(f, "<*>"),
            IdealSpec::Generators(gens) => {
                write!(f, "<")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{g}")?;
                }
                write!(f, ">")
            }
        }
    }
}

impl fmt::Display for ElementLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementLiteral::Integer(n) => write!(f, "{n}"),
            ElementLiteral::Matrix(rows) => {
                write!(f, "[")?;
                for (i, row) in rows.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "[")?;
                    for (j, e) in row.iter().enumerate() {
                        if j > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{e}")?;
                    }
                    write!(f, "]")?;
                }
                write!(f, "]")
            }
            ElementLiteral::Tuple(items) => {
                write!(f, "(")?;
                for (i, e) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
        }
    }
}
