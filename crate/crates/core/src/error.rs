use thiserror::Error;

use crate::partition::{CellId, Scheme};

/// Errors raised by the partitioning, constraint and simulation APIs.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("point ({x}, {y}) lies outside the field")]
    OutOfBounds { x: f64, y: f64 },

    #[error("cell {0} does not exist")]
    CellNotFound(CellId),

    #[error("operation not supported for scheme {0}")]
    UnsupportedScheme(Scheme),

    #[error("incomplete input: {0}")]
    IncompleteInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
