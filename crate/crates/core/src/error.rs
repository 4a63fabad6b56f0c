use thiserror::Error;

/// Errors raised by every routine in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("size guard exceeded: {what} is {value}, limit {limit}")]
    Guard {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A computed result contradicts a theorem the code relies on.
    #[error("internal defect: {0}")]
    Defect(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("2-adic precision exhausted: {0}")]
    Precision(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

impl Error {
    /// Stable machine-readable code used in command output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "PARSE",
            Error::Guard { .. } => "GUARD",
            Error::Precondition(_) => "PRECONDITION",
            Error::Defect(_) => "DEFECT",
            Error::Precision(_) => "PRECISION",
            Error::Overflow(_) => "OVERFLOW",
            Error::DegreeMismatch { .. } | Error::PointOutOfRange { .. } | Error::NotAPermutation(_) => "INVALID",
        }
    }

    pub(crate) fn guard(what: &'static str, value: impl Into<u128>, limit: impl Into<u128>) -> Self {
        Error::Guard {
            what,
            value: value.into(),
            limit: limit.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
