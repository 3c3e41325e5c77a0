use thiserror::Error;

use crate::quiver::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not invertible")]
    NotInvertible(String),

    #[error("expected a monomial of the form ±L^(j/2), got {0}")]
    NotMonomial(String),

    #[error("series must have constant term {expected}, got {found}")]
    ConstantTerm { expected: &'static str, found: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cannot parse motive class {input:?}: {reason}")]
    MotiveSyntax { input: String, reason: String },

    #[error("geometry input is inconsistent: {0}")]
    Geometry(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error(transparent)]
    Quiver(#[from] ParseError),

    #[error("unknown {kind} {name:?}; available: {available}")]
    Unknown {
        kind: &'static str,
        name: String,
        available: String,
    },
}
