//! Quandles from regular 4-polytopes, finitely presented quandles, and the
//! knot quandles of twist-spun knots.
//!
//! The arithmetic layer ([`exact`]) is generic over the scalar type; the
//! aliases below fix the concrete exact types used everywhere else.

pub mod exact;
pub mod fpq;
pub mod geometric;
pub mod knots;
pub mod quandle;
pub mod verify;

use num_bigint::BigInt;

pub use exact::{ArithError, Eisenstein, Field, Matrix, Quadratic, Vector};
pub use quandle::{FiniteQuandle, QuandleError, QuandleMap};

/// Arbitrary-precision reduced fraction.
pub type Rational = num_rational::BigRational;
/// Exact element of Q(sqrt5).
pub type QuadraticNumber = Quadratic<Rational>;
pub type Vector3 = Vector<QuadraticNumber, 3>;
pub type Vector4 = Vector<QuadraticNumber, 4>;
pub type Matrix3 = Matrix<QuadraticNumber, 3>;
pub type Matrix4 = Matrix<QuadraticNumber, 4>;
pub type EisensteinInteger = Eisenstein<BigInt>;
