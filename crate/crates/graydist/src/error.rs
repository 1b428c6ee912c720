use thiserror::Error;

/// Crate-wide error type. Law failures are *data* (see
/// [`crate::report::CheckReport`]), not errors; these variants cover
/// ill-formed inputs only.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("unknown generator: {0}")]
    UnknownGenerator(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("size limit exceeded: {0}")]
    SizeLimitExceeded(String),
    #[error("unsupported n: {0}")]
    UnsupportedN(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("resolution error: {0}")]
    Resolution(String),
}

pub type Result<T> = std::result::Result<T, Error>;
