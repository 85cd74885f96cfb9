//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the algebra engine and the CLI front end.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on mathematical input was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// A configured resource cap (degree, subset count, iteration depth) was
    /// exceeded. Carries a human-readable progress report.
    #[error("resource cap exceeded: {0}")]
    Resource(String),

    /// The chosen prime turned out to be unusable (for example the input is
    /// not squarefree modulo it); the caller should pick another prime.
    #[error("bad prime {prime}: {reason}")]
    BadPrime { prime: u64, reason: String },

    /// Text input could not be parsed. `position` is 1-based.
    #[error("syntax error at offset {position}: {message}")]
    Parse { position: usize, message: String },

    /// An internal invariant failed. Indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
