//! Crate-wide error type.
//!
//! Refusals are first-class: an operation asked about parameters outside the
//! range it models answers with [`Error::OutOfScope`] instead of guessing.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or contradictory input data.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The request is well-formed but outside the range the engine models.
    #[error("out of scope: {0}")]
    OutOfScope(String),

    /// An internal cross-check failed; results cannot be trusted.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    /// Numeric evaluation at a singular point.
    #[error("singular evaluation: {0}")]
    Singular(String),

    /// A series was requested outside its region of convergence.
    #[error("divergent series: {0}")]
    Divergent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
