//! Exact scalar arithmetic: half-integers, factorials and signed square roots.
//!
//! Rationals are `num_rational::BigRational`, which is always kept reduced
//! with a positive denominator.

mod factorial;
mod halfint;
mod sqrt;

pub use factorial::{factorial, factorial_factored, PrimeFactorization};
pub use halfint::HalfInt;
pub use sqrt::{exact_isqrt, sqrt_mul, sqrt_sum, sqrt_to_rational, SqrtRational};

use num_bigint::BigInt;
use num_rational::BigRational;

pub(crate) fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub(crate) fn integer(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}
