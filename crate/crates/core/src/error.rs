use thiserror::Error;

/// Errors raised when an evaluation is requested outside its domain.
///
/// Numerical non-convergence is not an error: it is reported through
/// [`Status`](crate::numeric::Status) on the returned outcome.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma pole at {0}")]
    Pole(f64),
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::InvalidDomain(msg.into())
    }

    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
