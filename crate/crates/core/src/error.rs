use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported combination: {0}")]
    Unsupported(String),
    #[error("coefficient rings differ: {left} vs {right}")]
    CoeffMismatch { left: String, right: String },
    #[error("not a formal group law: {0}")]
    NotAFormalGroupLaw(String),
    #[error("monomial {0} does not belong to this ring")]
    ForeignMonomial(String),
    #[error("chain complex basis of size {size} exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u128 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
