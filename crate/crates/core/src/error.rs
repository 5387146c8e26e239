use thiserror::Error;

use crate::domain::{Capability, DomainId};

/// Failures raised by the library.
///
/// Mathematical falsity (a factorization that is not well formed, a lemma
/// whose conclusion fails) is never an error; it is reported as data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0}")]
    Usage(String),

    #[error("{required} required, domain {domain} lacks {}", .required.flag_name())]
    Capability { required: Capability, domain: DomainId },

    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch { left: DomainId, right: DomainId },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("malformed factorization: {0}")]
    Validation(String),

    #[error("input outside supported bounds: {0}")]
    OutOfBounds(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(column: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line: 1, column, message: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
