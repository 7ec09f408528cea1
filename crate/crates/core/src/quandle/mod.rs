//! Finite quandles as operation tables.

mod finite;
pub mod io;
mod morphism;

use thiserror::Error;

pub use finite::{validate_table, FiniteQuandle, ValidationReport};
pub use morphism::{
    all_homomorphisms, all_homomorphisms_with_budget, find_isomorphism, generating_set, QuandleMap,
    DEFAULT_HOM_BUDGET,
};

/// Anything with a right-invertible binary operation; used for evaluating
/// presentations in finite and infinite quandles alike.
pub trait QuandleOps {
    type Element: Clone + PartialEq;

    /// `x * y`.
    fn op(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;

    /// `x *^-1 y`, the unique `z` with `z * y = x`.
    fn op_inv(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;

    /// `(* y)^k (x)`; negative `k` iterates the inverse.
    fn op_pow(&self, x: &Self::Element, y: &Self::Element, k: i64) -> Self::Element {
        let mut acc = x.clone();
        for _ in 0..k.unsigned_abs() {
            acc = if k > 0 {
                self.op(&acc, y)
            } else {
                self.op_inv(&acc, y)
            };
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuandleError {
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("column {column} is not a permutation")]
    NotBijective { column: usize },
    #[error("order must be at least 1")]
    EmptyQuandle,
    #[error("seed set is empty")]
    EmptySeeds,
    #[error("element {0} out of range")]
    OutOfRange(usize),
    #[error("homomorphism search needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}
