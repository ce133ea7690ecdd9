use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid signed permutation: {0}")]
    InvalidSignedPermutation(String),
    #[error("element {element} is not valid for type {lie_type}: {reason}")]
    WrongType {
        element: String,
        lie_type: String,
        reason: String,
    },
    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },
    #[error("zero polynomial has no leading monomial")]
    ZeroPolynomial,
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("prime {0} is not an odd prime")]
    BadPrime(u64),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(position: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            position: position.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
