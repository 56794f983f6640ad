//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum SaeError {
    /// A caller-supplied argument violates a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Shapes of two related objects do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A file does not conform to one of the binary formats.
    #[error("format error in {path}: {detail}")]
    Format { path: String, detail: String },

    /// A numerical invariant failed (non-finite loss, degenerate column, ...).
    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, SaeError>;

impl SaeError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        SaeError::InvalidArgument(msg.into())
    }

    pub fn dims(msg: impl Into<String>) -> Self {
        SaeError::DimensionMismatch(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        SaeError::Numerical(msg.into())
    }
}
