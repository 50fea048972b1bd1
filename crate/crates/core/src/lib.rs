//! Exact angular-momentum algebra and sum-rule verification.
//!
//! The crate computes Clebsch-Gordan coefficients, Wigner 3j symbols,
//! Gegenbauer polynomials and generalized characters of the rotation group
//! with exact rational arithmetic, and checks the CG/3j sum rule
//!
//! ```text
//! sum_{m,m'} (-1)^(m'-m) / [Γ(3+m-m') Γ(3-m+m')] <j m k 0|j m> <j m' k 0|j m'>
//!     = [k(k+1) + 4j(j+1)] / [24 j(j+1)]      (when j, k, j satisfy the triangle rule)
//! ```
//!
//! by exact rational equality. Floating point only appears at the edges:
//! quadrature cross-checks and pointwise evaluation of characters.

pub mod arith;
pub mod characters;
mod error;
pub mod gegenbauer;
pub mod integrals;
pub mod sumrule;
pub mod wigner;

pub use arith::{
    factorial_factored, sqrt_mul, sqrt_to_rational, HalfInt, PrimeFactorization, SqrtRational,
};
pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
