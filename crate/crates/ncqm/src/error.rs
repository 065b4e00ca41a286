use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("scalar kind mismatch: {0}")]
    KindMismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("point is not on the det W = 0 surface")]
    NotOnSurface,
    #[error("alphabet mismatch: {0} vs {1}")]
    AlphabetMismatch(String, String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("factorization mismatch: {0}")]
    FactorizationMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("out of bounds: {0}")]
    OutOfBounds(String),
    #[error("singular matrix")]
    Singular,
    #[error("not representable exactly: {0}")]
    Inexact(String),
}

pub type Result<T> = std::result::Result<T, Error>;
