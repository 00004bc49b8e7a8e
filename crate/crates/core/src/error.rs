use thiserror::Error;

/// Errors raised by the algebra kernels, witness builders and parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero input where a nonzero element is required: {0}")]
    ZeroInput(&'static str),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid order matrix: {0}")]
    InvalidMatrix(String),

    #[error("irrational entries are not allowed here")]
    Irrational,

    #[error("matrix is singular")]
    Singular,

    #[error("argument must be positive: {0}")]
    NonPositive(&'static str),

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("evaluation undefined: {0}")]
    Undefined(String),

    #[error("not a member of {ring}: {reason}")]
    NotMember { ring: &'static str, reason: String },

    #[error("order has ties between distinct monomials")]
    NotTotalOrder,

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("oracle failed: {0}")]
    Oracle(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("constructed witness failed verification: {0}")]
    Unverified(String),

    #[error("parse error at position {pos}: expected {expected}")]
    Parse { pos: usize, expected: String },
}

pub type Result<T> = std::result::Result<T, Error>;
