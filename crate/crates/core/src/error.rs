use thiserror::Error;

/// Failure modes shared by every operation in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed shapes, negative multiplicities, inconsistent inputs.
    #[error("structural error: {0}")]
    Structural(String),
    /// Power iteration did not converge, or the eigenproblem stayed degenerate.
    #[error("numeric error: {0}")]
    Numeric(String),
    /// Input is well-formed but outside what the operation supports.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// A required precondition on an earlier result does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// Unknown builtin names and similar caller mistakes.
    #[error("usage error: {0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn structural(msg: impl Into<String>) -> Error {
    Error::Structural(msg.into())
}
