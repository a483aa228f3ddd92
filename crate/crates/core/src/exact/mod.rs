//! Exact scalar arithmetic: arbitrary-precision rationals, half-integer
//! quantum numbers, and factorials.
//!
//! Everything downstream (polynomials, operators, the verification suite)
//! is built over these scalars, so every identity in the crate can be
//! checked by exact equality rather than within a floating-point tolerance.

mod half_int;
mod rational;

pub use half_int::HalfInt;
pub use rational::Rational;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

/// Errors from scalar construction, parsing, and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    /// A rational was constructed with a zero denominator.
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    /// Division by an exact zero.
    #[error("division by zero")]
    DivisionByZero,
    /// The string is not a valid `p/q` or integer literal.
    #[error("cannot parse {0:?} as a rational number")]
    ParseRational(String),
    /// The value is not representable as `k/2` with integer `k`.
    #[error("{0} is not an integer or half-odd-integer")]
    NotHalfInteger(String),
    /// A spin quantum number must be nonnegative.
    #[error("spin must be nonnegative, got {0}")]
    NegativeSpin(String),
}

/// Exact `k!` as an arbitrary-precision integer.
///
/// `factorial(0) == 1` (empty product). Negative arguments are ruled out
/// by the unsigned parameter type.
pub fn factorial(k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= i;
    }
    acc
}

/// The magnetic quantum numbers `S, S-1, ..., -S` in descending order.
///
/// The list has exactly `2S + 1` entries and consecutive entries differ
/// by one. Descending order is the basis convention used everywhere in
/// this crate: index `i` of an operator diagonal corresponds to `m = S - i`.
pub fn spin_range(s: &HalfInt) -> Result<Vec<HalfInt>, ExactError> {
    if s.is_negative() {
        return Err(ExactError::NegativeSpin(s.to_string()));
    }
    let count: usize = (s.twice() + 1u32)
        .try_into()
        .expect("spin dimension exceeds addressable memory");
    let mut range = Vec::with_capacity(count);
    let mut twice = s.twice().clone();
    for _ in 0..count {
        range.push(HalfInt::from_twice(twice.clone()));
        twice -= 2;
    }
    Ok(range)
}
