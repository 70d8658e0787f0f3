use thiserror::Error;

/// Errors surfaced by the library.
///
/// Guard refusals are kept distinct from input errors so front ends can map
/// them to different exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("search guard refused {what}: size {size} exceeds limit {limit}")]
    GuardRefusal {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("value {0} is not an element of the encoded set")]
    NotInSet(String),

    #[error("structural violation: {0}")]
    StructuralViolation(String),

    /// An identity that holds unconditionally was observed to fail.
    #[error("tripwire: {0}")]
    Tripwire(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
