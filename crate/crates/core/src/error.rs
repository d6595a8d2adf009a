use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Bad arguments: dimension mismatch, out-of-range indices, forbidden `q`.
    #[error("usage error: {0}")]
    Usage(String),
    #[error("invalid pair relations: {0}")]
    InvalidRelations(String),
    #[error("evaluation error: {0}")]
    Evaluation(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// An admissible pair or family failed its structural checks.
    #[error("validation error: {0}")]
    Validation(String),
    /// Family parameters violate the nonvanishing constraints.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// The case-split solver met an equation outside the shapes it handles.
    #[error("unsupported system: {0}")]
    Unsupported(String),
    /// A matrix solves the reflection equation but matches no family.
    #[error("no matching family: {0}")]
    NoMatchingFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! usage {
    ($($arg:tt)*) => { $crate::error::Error::Usage(format!($($arg)*)) };
}
pub(crate) use usage;
