//! Error type shared by the whole crate.

use thiserror::Error;

/// Failures surfaced by the library.
///
/// `Inconsistency` is reserved for situations that indicate a bug in the
/// construction (a relation that should hold but does not); everything else
/// is a problem with the caller's input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid join: {0}")]
    InvalidJoin(String),
    #[error("tableau cannot be split: {0}")]
    NotSplittable(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}

pub(crate) fn inconsistent<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Inconsistency(msg.into()))
}
