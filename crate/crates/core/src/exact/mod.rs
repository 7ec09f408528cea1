//! Exact scalars: the field Q(sqrt5), the Eisenstein integers, and small
//! dense vectors/matrices generic over any field.

mod eisenstein;
mod linalg;
mod quadratic;

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

pub use eisenstein::Eisenstein;
pub use linalg::{Matrix, Vector};
pub use quadratic::Quadratic;

/// Minimal field interface used by the linear algebra.
///
/// Blanket-implemented, so `f64`, `Ratio<i64>`, `BigRational` and
/// [`Quadratic`] over any of those all qualify.
pub trait Field:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
}
