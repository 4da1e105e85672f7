//! Elementary number theory on arbitrary-precision naturals, by trial division.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

pub(crate) fn smallest_prime_factor(n: &BigUint) -> Option<BigUint> {
    if *n <= BigUint::one() {
        return None;
    }
    let two = BigUint::from(2u32);
    if n.is_even() {
        return Some(two);
    }
    let mut d = BigUint::from(3u32);
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            return Some(d);
        }
        d += &two;
    }
    Some(n.clone())
}

pub(crate) fn is_prime(n: &BigUint) -> bool {
    smallest_prime_factor(n).as_ref() == Some(n)
}

/// Distinct prime factors in increasing order.
pub(crate) fn prime_factors(n: &BigUint) -> Vec<BigUint> {
    let mut out = Vec::new();
    let mut m = n.clone();
    while let Some(p) = smallest_prime_factor(&m) {
        while (&m % &p).is_zero() {
            m /= &p;
        }
        out.push(p);
    }
    out
}

/// Product of the distinct prime factors; `rad(0) = 0`, `rad(1) = 1`.
pub(crate) fn radical(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    prime_factors(n).into_iter().fold(BigUint::one(), |acc, p| acc * p)
}

/// Primes in increasing order, starting at 2.
pub(crate) fn primes() -> impl Iterator<Item = BigUint> {
    (2u64..).map(BigUint::from).filter(is_prime)
}
