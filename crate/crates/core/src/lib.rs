//! Prime and semiprime fuzzy ideals over finite rings and the integers.

pub mod corpus;
pub mod dsl;
pub mod error;
pub mod fuzzy;
pub mod grid;
pub mod ideal;
pub mod primeness;
pub mod radical;
pub mod ring;
pub mod scalar;
pub mod set;

mod arith;

pub use error::{Error, Result};
pub use fuzzy::{FuzzyIdeal, FuzzyPoint, FuzzySet};
pub use grid::ValueGrid;
pub use ideal::CrispIdeal;
pub use primeness::{classify, Classification, Notion, Witness};
pub use radical::frad;
pub use ring::{build_ring, Element, Ring, RingSpec};
pub use scalar::Scalar;

/// Exact membership grades.
pub type Membership = num_rational::BigRational;

/// Fuzzy ideals with exact membership grades.
pub type RationalFuzzyIdeal = FuzzyIdeal<Membership>;
