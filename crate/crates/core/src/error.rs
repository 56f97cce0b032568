use thiserror::Error;

/// A syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("{0} is not the midpoint of a standard dyadic interval")]
    NotAMidpoint(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tree pair: {0}")]
    InvalidTreePair(String),

    #[error("vertex {0:?} is not followed by this trace")]
    UnknownVertex(String),

    #[error("time range {lo}..{hi} outside word of length {len}")]
    TimeRange { lo: usize, hi: usize, len: usize },

    #[error("family index {index} out of range for k = {k}")]
    FamilyIndex { k: usize, index: usize },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("fordham table: {0}")]
    Table(String),

    #[error("cache file: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
