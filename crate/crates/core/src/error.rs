use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two values built for different cube dimensions were combined.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },

    /// A brute-force oracle was asked for a size it cannot enumerate.
    #[error("capacity exceeded: {what} supports n <= {max}, got {got}")]
    Capacity {
        what: &'static str,
        max: u32,
        got: u32,
    },

    /// Malformed textual or binary input.
    #[error("parse error: {0}")]
    Parse(String),

    /// Cross-algorithm results disagree.
    #[error("inconsistent results: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
