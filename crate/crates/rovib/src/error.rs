use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Bad user input (unknown unit tag, malformed range, ...).
    #[error("usage error: {0}")]
    Usage(String),

    /// A numerical procedure failed to converge or produced garbage.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// The requested quantity only exists for a physical (bound, normalizable)
    /// state and the given parameters are not one.
    #[error("non-physical state: {0}")]
    NonPhysical(String),

    /// Config file problem, with a 1-based line number when one applies.
    #[error("config error (line {line}): {message}")]
    Config { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
