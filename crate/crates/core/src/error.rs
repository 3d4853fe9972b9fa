use thiserror::Error;

/// Errors produced by the library and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31 - 1]")]
    NotPrime(u64),

    #[error("operands live in different polynomial rings")]
    RingMismatch,

    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    InvalidVariable { index: usize, nvars: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("Groebner basis computation exceeded its budget ({0})")]
    DegreeGuard(String),

    #[error("no convergence within {iterations} iterations")]
    NonConvergence { iterations: usize },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
