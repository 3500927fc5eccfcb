//! Exact rational scalars.
//!
//! All arithmetic in this crate happens over `Rational`, an
//! arbitrary-precision fraction kept in canonical form (reduced, positive
//! denominator). No floating point is used anywhere.

use num_bigint::BigInt;

pub use num_rational::BigRational as Rational;

/// An integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
