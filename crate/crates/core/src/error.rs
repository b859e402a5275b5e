use thiserror::Error;

/// Errors raised by path parsing, lattice operations and enumerations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("enumeration cap exceeded: more than {cap} elements")]
    CapExceeded { cap: usize },

    #[error("length {len} exceeds configured limit {limit}")]
    LimitExceeded { len: usize, limit: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
