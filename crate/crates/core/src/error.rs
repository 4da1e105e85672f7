use thiserror::Error;

use crate::dsl::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid ring specification: {0}")]
    InvalidSpec(String),

    #[error("ring would have {size} elements, above the limit of {limit}")]
    SizeLimit { size: String, limit: usize },

    #[error("ring axiom violated: {0}")]
    RingAxiom(String),

    #[error("{0} requires a finite table-backed ring")]
    UnsupportedBackend(&'static str),

    #[error("element does not belong to the ring: {0}")]
    ElementOutOfRange(String),

    #[error("ideal must be proper: {0}")]
    NotProper(&'static str),

    #[error("subset is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("fuzzy ideal axiom `{axiom}` fails at x = {x}, y = {y}")]
    FuzzyAxiom { axiom: &'static str, x: String, y: String },

    #[error("invalid cut chain at level {level}: {reason}")]
    InvalidChain { level: usize, reason: String },

    #[error("membership value {0} lies outside [0, 1]")]
    ValueOutOfRange(String),

    #[error("fuzzy ideal is constant; the notion is only defined for non-constant ideals")]
    ConstantIdeal,

    #[error("operands live over different rings")]
    MixedRings,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("corpus has {count} members, above the cap of {cap}")]
    CorpusTooLarge { count: String, cap: usize },

    #[error("check failed: {0}")]
    CheckFailed(String),
}
