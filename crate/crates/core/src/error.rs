use thiserror::Error;

/// Errors raised by argument validation and parsing.
///
/// Decomposition failures carry a partial result and use
/// [`DecomposeError`](crate::decompose::DecomposeError) instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid degree sequence at entry {index}: {reason}")]
    InvalidDegreeSequence { index: usize, reason: String },

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("argument outside domain: {0}")]
    OutOfDomain(String),

    #[error("invalid Betti diagram: {0}")]
    InvalidDiagram(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
