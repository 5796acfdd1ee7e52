use thiserror::Error;

use crate::face::Face;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A text input could not be parsed. Line and column are 1-based.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("invalid element name `{0}`")]
    InvalidName(String),

    #[error("duplicate element `{0}`")]
    DuplicateElement(String),

    #[error("ground set has {0} elements, at most 64 are supported")]
    TooManyElements(usize),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid operation: {0}")]
    InvalidOperation(String),

    /// An operation was called outside of its domain (for example, the
    /// layer function on a face that is not in the layer).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("not a simplicial complex: {0}")]
    NotClosed(String),

    #[error("illegal collapse at step {index} (face {face:?}): {reason}")]
    IllegalStep {
        index: usize,
        face: Face,
        reason: String,
    },

    /// A guarantee of the construction did not hold. This always indicates a
    /// bug in this crate, never bad input.
    #[error("internal error: {0}")]
    Internal(String),
}
