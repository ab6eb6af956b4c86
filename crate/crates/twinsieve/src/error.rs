use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A stated precondition does not hold.
    #[error("precondition error: {0}")]
    Precondition(String),

    /// Bad CLI usage or configuration.
    #[error("usage error: {0}")]
    Usage(String),

    /// Missing or malformed configuration input (e.g. golden fixture).
    #[error("configuration error: {0}")]
    Config(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
