use thiserror::Error;

/// Errors raised by builders, checks and input parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} has dimension {dim}, over the budget of {budget}")]
    BudgetExceeded {
        what: String,
        dim: u128,
        budget: usize,
    },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("invalid flag at chain index {index}: {reason}")]
    InvalidFlag { index: usize, reason: String },

    #[error("tableau shapes differ: {0}")]
    ShapeMismatch(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
