//! Membership-value scalars.
//!
//! Fuzzy ideals in this crate are generic over the type used for membership
//! grades. Any ordered field from `num-traits` works; the crate root fixes
//! [`Membership`](crate::Membership) (arbitrary-precision rationals) as the
//! default so every comparison is exact.

use std::fmt::{Debug, Display};

use num_traits::Num;

/// An ordered field usable as a membership grade in `[0, 1]`.
pub trait Scalar: Num + Clone + PartialOrd + Debug + Display + Send + Sync + 'static {
    /// `(a + b) / 2`.
    fn midpoint(&self, other: &Self) -> Self {
        (self.clone() + other.clone()) / (Self::one() + Self::one())
    }

    fn in_unit_interval(&self) -> bool {
        *self >= Self::zero() && *self <= Self::one()
    }
}

impl<T> Scalar for T where T: Num + Clone + PartialOrd + Debug + Display + Send + Sync + 'static {}

pub(crate) fn min_of<V: Scalar>(a: &V, b: &V) -> V {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub(crate) fn max_of<V: Scalar>(a: &V, b: &V) -> V {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    #[test]
    fn midpoint_is_exact_for_rationals() {
        let a = Ratio::new(1i64, 4);
        let b = Ratio::new(1i64, 2);
        assert_eq!(a.midpoint(&b), Ratio::new(3, 8));
    }

    #[test]
    fn unit_interval() {
        assert!(Ratio::new(3i64, 5).in_unit_interval());
        assert!(!Ratio::new(6i64, 5).in_unit_interval());
        assert!(!Ratio::new(-1i64, 5).in_unit_interval());
    }
}
