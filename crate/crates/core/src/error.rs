use thiserror::Error;

use crate::algebra::Violation;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed rational {text:?}: {reason}")]
    MalformedRational { text: String, reason: String },

    #[error("unknown basis name {0:?}")]
    UnknownName(String),

    #[error("duplicate basis name {0:?}")]
    DuplicateName(String),

    #[error("invalid basis name {0:?}")]
    InvalidName(String),

    #[error("unbound name {0:?} in expression")]
    UnboundName(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("subspace is not a subalgebra")]
    NotSubalgebra,

    #[error("subspace is not an ideal")]
    NotIdeal,

    #[error("linear map is singular")]
    Singular,

    #[error("not a left Leibniz algebra: identity fails at basis triple {:?}", .0.indices)]
    NotLeibniz(Violation),

    #[error("algebra is not nilpotent")]
    NotNilpotent,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("illegal parameter for {family}: {reason}")]
    IllegalParameter { family: String, reason: String },

    #[error("no Cartan subalgebra found within {attempts} attempts")]
    NoCartanFound { attempts: usize },

    #[error("candidate failed verification: {0}")]
    CandidateFailed(String),

    #[error("algebra file error: {0}")]
    File(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
