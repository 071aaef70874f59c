use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on the input was violated.
    #[error("invalid input: {0}")]
    Input(String),

    /// An enumeration window or closure cap was exceeded.
    #[error("{what} too large: {actual} exceeds limit {limit}")]
    Size {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    /// Text input could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The automorphism search ran out of tree nodes.
    #[error("search budget of {limit} nodes exceeded after {explored} nodes (depth {depth})")]
    Budget {
        limit: u64,
        explored: u64,
        depth: usize,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
