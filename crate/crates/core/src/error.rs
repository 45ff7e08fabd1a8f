use thiserror::Error;

/// Errors raised by the construction, transform and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("not a face of the complex: {0}")]
    NotAFace(String),

    #[error("not an edge of the complex: {0}")]
    NotAnEdge(String),

    #[error("link condition fails for edge {0}")]
    LinkCondition(String),

    #[error("vertex sets overlap: {0}")]
    OverlappingVertices(String),

    #[error("complex has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("relabeling is not injective on {0}")]
    NonInjectiveRelabel(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
