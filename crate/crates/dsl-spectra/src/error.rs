//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building graphs, parsing input, or
/// running one of the numeric routines.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or routine was handed parameters outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Two vertices have no connecting path, so distances are undefined.
    #[error("graph is disconnected: no path between vertices {u} and {v}")]
    Disconnected { u: usize, v: usize },

    /// A matrix failed a structural check (squareness, symmetry).
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    /// A vertex partition is malformed or does not fit the graph.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    /// An exact routine only handles small orders and was given a larger one.
    #[error("unsupported order: {0}")]
    UnsupportedOrder(String),

    /// An exhaustive routine refused an input above its size cap.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// Text input could not be parsed; the location names the line or byte.
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    /// A numeric argument fell outside the range a routine supports.
    #[error("out of range: {0}")]
    OutOfRange(String),
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
