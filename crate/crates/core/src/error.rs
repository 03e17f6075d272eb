use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("polynomial is not homogeneous (found degrees {first} and {second})")]
    Inhomogeneous { first: u32, second: u32 },

    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,

    #[error("resource guard exceeded: {what} = {value} > {limit}")]
    Guard {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    /// An invariant that should hold for every valid input was broken.
    #[error("internal invariant breached: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn guard(what: &'static str, value: u128, limit: u128) -> Self {
        Error::Guard { what, value, limit }
    }
}
