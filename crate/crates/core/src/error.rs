use thiserror::Error;

/// Errors raised by the library. Every variant carries a message naming the
/// condition that failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("search limit exceeded: {0}")]
    SearchLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
