//! Free quandles, presentations, and enumeration of finitely presented quandles.

mod enumerate;
mod free;
mod presentation;
mod text;

use thiserror::Error;

pub use enumerate::{
    enumerate_presented, EnumerationOutcome, EnumerationResult, EnumerationStats,
    ENUMERATION_SCHEMA,
};
pub use free::{fq_multiply, fq_multiply_inv, fq_pow, FreeQuandleElement, GroupWord, Letter};
pub use presentation::{
    check_assignment, AssignmentCheck, Presentation, QuandleExpression, Relation,
};
pub use text::{parse_presentation, serialize_presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FpqError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}, column {column}: undeclared symbol '{symbol}'")]
    UndeclaredAt {
        symbol: String,
        line: usize,
        column: usize,
    },
    #[error("line {line}, column {column}: exponent must be nonzero")]
    ZeroExponent { line: usize, column: usize },
    #[error("undeclared symbol '{0}'")]
    UndeclaredSymbol(String),
    #[error("generator '{0}' declared twice")]
    DuplicateGenerator(String),
    #[error("no relation with index {0}")]
    NoSuchRelation(usize),
    #[error("relation {relation} does not have the form {generator} = e")]
    NotDefining { generator: String, relation: usize },
    #[error("generator '{0}' occurs in its own definition")]
    SelfReferential(String),
    #[error("expected {expected} generator images, got {found}")]
    AssignmentLength { expected: usize, found: usize },
    #[error("image {0} is not an element of the target")]
    ImageOutOfRange(usize),
    #[error("cap {cap} is below the generator count {generators}")]
    CapTooSmall { cap: usize, generators: usize },
    #[error("closed table failed verification: {0}")]
    Unsound(String),
}
