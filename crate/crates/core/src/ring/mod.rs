//! Unital rings: finite rings backed by operation tables, and the integers.

mod build;
mod spec;
mod table;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use build::{build_ring, build_ring_with_limit, quotient_ring, DEFAULT_SIZE_LIMIT};
pub use spec::{ElementLiteral, IdealSpec, RingSpec};
pub use table::TableRing;

use crate::error::{Error, Result};

/// A ring element: an index into the canonical enumeration of a table ring,
/// or an integer.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Index(usize),
    Integer(BigInt),
}

impl Element {
    pub fn index(&self) -> Option<usize> {
        match self {
            Element::Index(i) => Some(*i),
            Element::Integer(_) => None,
        }
    }

    pub fn integer(&self) -> Option<&BigInt> {
        match self {
            Element::Integer(n) => Some(n),
            Element::Index(_) => None,
        }
    }
}

impl From<i64> for Element {
    fn from(n: i64) -> Self {
        Element::Integer(BigInt::from(n))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Mul,
    Neg,
}

pub enum RingKind {
    Integers,
    Table(TableRing),
}

struct RingInner {
    spec: RingSpec,
    kind: RingKind,
    quotient: Option<QuotientMap>,
}

/// Natural projection onto a quotient ring.
#[derive(Clone)]
enum QuotientMap {
    FromTable { base: Ring, projection: Vec<usize> },
    FromIntegers { modulus: u64 },
}

/// An immutable, cheaply clonable ring handle.
#[derive(Clone)]
pub struct Ring {
    inner: Arc<RingInner>,
}

impl Ring {
    pub fn integers() -> Self {
        Ring::new(RingSpec::Integers, RingKind::Integers, None)
    }

    fn new(spec: RingSpec, kind: RingKind, quotient: Option<QuotientMap>) -> Self {
        Ring { inner: Arc::new(RingInner { spec, kind, quotient }) }
    }

    pub fn spec(&self) -> &RingSpec {
        &self.inner.spec
    }

    pub fn kind(&self) -> &RingKind {
        &self.inner.kind
    }

    pub fn table(&self) -> Option<&TableRing> {
        match &self.inner.kind {
            RingKind::Table(t) => Some(t),
            RingKind::Integers => None,
        }
    }

    pub(crate) fn require_table(&self, what: &'static str) -> Result<&TableRing> {
        self.table().ok_or(Error::UnsupportedBackend(what))
    }

    pub fn is_integers(&self) -> bool {
        matches!(self.inner.kind, RingKind::Integers)
    }

    /// Number of elements, or `None` for the integers.
    pub fn size(&self) -> Option<usize> {
        self.table().map(TableRing::size)
    }

    pub fn is_commutative(&self) -> bool {
        self.table().is_none_or(TableRing::is_commutative)
    }

    pub fn zero(&self) -> Element {
        match &self.inner.kind {
            RingKind::Integers => Element::Integer(BigInt::zero()),
            RingKind::Table(t) => Element::Index(t.zero()),
        }
    }

    pub fn one(&self) -> Element {
        match &self.inner.kind {
            RingKind::Integers => Element::Integer(BigInt::one()),
            RingKind::Table(t) => Element::Index(t.one()),
        }
    }

    /// All elements in canonical order; `None` for the integers.
    pub fn elements(&self) -> Option<impl Iterator<Item = Element>> {
        self.size().map(|n| (0..n).map(Element::Index))
    }

    pub fn check(&self, x: &Element) -> Result<()> {
        match (&self.inner.kind, x) {
            (RingKind::Integers, Element::Integer(_)) => Ok(()),
            (RingKind::Table(t), Element::Index(i)) if *i < t.size() => Ok(()),
            _ => Err(Error::ElementOutOfRange(format!("{x:?} in {}", self.spec()))),
        }
    }

    /// Evaluates `op` on `a` (and `b` for binary operations).
    pub fn apply(&self, op: RingOp, a: &Element, b: Option<&Element>) -> Result<Element> {
        self.check(a)?;
        let second = || -> Result<&Element> {
            let b = b.ok_or_else(|| Error::Precondition(format!("{op:?} needs two operands")))?;
            self.check(b)?;
            Ok(b)
        };
        Ok(match (&self.inner.kind, op) {
            (RingKind::Integers, RingOp::Neg) => Element::Integer(-int(a)),
            (RingKind::Integers, RingOp::Add) => Element::Integer(int(a) + int(second()?)),
            (RingKind::Integers, RingOp::Mul) => Element::Integer(int(a) * int(second()?)),
            (RingKind::Table(t), RingOp::Neg) => Element::Index(t.neg(idx(a))),
            (RingKind::Table(t), RingOp::Add) => Element::Index(t.add(idx(a), idx(second()?))),
            (RingKind::Table(t), RingOp::Mul) => Element::Index(t.mul(idx(a), idx(second()?))),
        })
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.apply(RingOp::Add, a, Some(b))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.apply(RingOp::Mul, a, Some(b))
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        self.apply(RingOp::Neg, a, None)
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Result<Element> {
        let nb = self.neg(b)?;
        self.add(a, &nb)
    }

    /// Maps an element of the base ring onto its coset, when `self` was
    /// built as a quotient.
    pub fn project(&self, base_element: &Element) -> Result<Element> {
        match &self.inner.quotient {
            Some(QuotientMap::FromTable { base, projection }) => {
                base.check(base_element)?;
                Ok(Element::Index(projection[idx(base_element)]))
            }
            Some(QuotientMap::FromIntegers { modulus }) => {
                let n = base_element
                    .integer()
                    .ok_or_else(|| Error::ElementOutOfRange(format!("{base_element:?}")))?;
                let m = BigInt::from(*modulus);
                let r = ((n % &m) + &m) % &m;
                Ok(Element::Index(r.try_into().expect("residue fits in usize")))
            }
            None => Err(Error::Precondition(format!("{} is not a quotient ring", self.spec()))),
        }
    }

    /// The literal that denotes `x`.
    pub fn literal(&self, x: &Element) -> Result<ElementLiteral> {
        self.check(x)?;
        match (&self.inner.kind, x) {
            (RingKind::Integers, Element::Integer(n)) => Ok(ElementLiteral::Integer(n.clone())),
            (RingKind::Table(t), Element::Index(i)) => Ok(t.layout().literal(*i)),
            _ => unreachable!("checked above"),
        }
    }

    /// Types a literal against this ring. Residues are reduced modulo `n`.
    pub fn element_from_literal(&self, lit: &ElementLiteral) -> Result<Element> {
        match &self.inner.kind {
            RingKind::Integers => match lit {
                ElementLiteral::Integer(n) => Ok(Element::Integer(n.clone())),
                other => Err(Error::ElementOutOfRange(format!("expected an integer, found {other}"))),
            },
            RingKind::Table(t) => t.layout().index_of(lit).map(Element::Index),
        }
    }

    pub fn display_element(&self, x: &Element) -> String {
        self.literal(x).map(|l| l.to_string()).unwrap_or_else(|_| format!("{x:?}"))
    }

    pub fn same_as(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.spec() == other.spec()
    }

    pub(crate) fn ensure_same(&self, other: &Ring) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.spec())
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}

fn int(x: &Element) -> &BigInt {
    x.integer().expect("checked integer element")
}

fn idx(x: &Element) -> usize {
    x.index().expect("checked table element")
}
