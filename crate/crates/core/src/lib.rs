//! Exact machinery for partition-regularity experiments: arbitrary-precision
//! rational linear algebra, the coefficient congruences `c_n * n = 2^(n-1) (mod 2^n)`,
//! staged 2-adic colourings of the positive integers, and bounded searches for
//! monochromatic images of integer matrices under divisibility constraints.
//!
//! The linear algebra layer is generic over the scalar type (anything
//! implementing [`Scalar`]); everything else works over the concrete
//! arbitrary-precision aliases below.

pub mod colouring;
pub mod error;
mod json;
pub mod linalg;
pub mod matrix;
pub mod scalar;
pub mod systems;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::Scalar;

/// Arbitrary-precision signed integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision unsigned integer.
pub type Nat = num_bigint::BigUint;
/// Arbitrary-precision rational in canonical form (reduced, positive denominator).
pub type Rational = num_rational::BigRational;
/// Matrix of arbitrary-precision rationals; the workhorse of the crate.
pub type ExactMatrix = Matrix<Rational>;
