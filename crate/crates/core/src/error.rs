//! Library-wide error type.

use thiserror::Error;

/// Errors surfaced by the mathematical layers.
///
/// `Parse` indicates malformed textual/JSON input; everything else is a
/// mathematical precondition failure or an honest "cannot decide" outcome.
#[derive(Debug, Error)]
pub enum CoreError {
    /// Input text or JSON could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A mathematical precondition was violated (singular curve, zero
    /// polynomial, non-prime modulus, out-of-range family index, ...).
    #[error("{0}")]
    Math(String),

    /// A computation would require honest univariate factorization that the
    /// library deliberately does not perform.
    #[error("needs factorization: {0}")]
    NeedsFactorization(String),

    /// Internal consistency failure; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

impl CoreError {
    pub fn math(msg: impl Into<String>) -> Self {
        CoreError::Math(msg.into())
    }
    pub fn parse(msg: impl Into<String>) -> Self {
        CoreError::Parse(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        CoreError::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, CoreError>;
