//! Error type shared by every module.

use thiserror::Error;

/// Failures raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
    /// Colored arithmetic outside its domain.
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    /// A family, rank, weight or residue set that the tables do not admit.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    /// An algorithm received an input outside its domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A search exceeded the configured resource bound.
    #[error("resource guard: {0}")]
    ResourceGuard(String),
    /// Checked series arithmetic overflowed.
    #[error("overflow: {0}")]
    Overflow(String),
}

/// Result alias for [`Error`].
pub type Result<T> = std::result::Result<T, Error>;
