//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not a factor; remainder {remainder}")]
    NotAFactor { remainder: String },

    #[error("no real root > 1: {0}")]
    NotACandidate(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("precision escalation exhausted: {0}")]
    Precision(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
