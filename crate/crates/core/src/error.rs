//! Error type shared by every module.

use thiserror::Error;

/// Failure modes of the library.
///
/// `Input` covers malformed or inconsistent arguments, `Computation` covers
/// legitimate failures of a requested computation (an exhausted search budget,
/// a non-admissible lifting), `Verification` reports a checked identity that
/// did not hold, and `Internal` reports a violated invariant that the
/// mathematics guarantees.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("computation failed: {0}")]
    Computation(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
