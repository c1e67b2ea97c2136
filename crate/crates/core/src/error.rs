//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by the verification pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// An operand fell outside the mathematical domain of an operation
    /// (division by an interval containing zero, log of a nonpositive
    /// interval, a shift parameter with the wrong sign, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The working precision cannot support the requested computation.
    #[error("precision error: {0}")]
    Precision(String),

    /// Coefficient data required by a provider is missing or malformed.
    #[error("data error: {0}")]
    Data(String),

    /// Input validation failed (instance descriptors, zeros files,
    /// parameter constraints).
    #[error("validation error: {0}")]
    Validation(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
