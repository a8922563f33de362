use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("qubit index {index} out of range for width {width}")]
    Width { index: usize, width: usize },
    #[error("qubit {0} appears more than once")]
    Duplicate(usize),
    #[error("width mismatch: {0} vs {1} qubits")]
    WidthMismatch(usize, usize),
    #[error("generator {0} is the identity")]
    Identity(usize),
    #[error("empty generator set")]
    Empty,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("cannot contract {from} onto {target}: not adjacent")]
    NotAdjacent { target: usize, from: usize },
    #[error("cannot toggle vertex {0}: not lit")]
    NotLit(usize),
    #[error("invalid canonical form: {0}")]
    InvalidForm(String),
    #[error("internal consistency defect: {0}")]
    Defect(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }

    pub(crate) fn defect(msg: impl Into<String>) -> Self {
        Error::Defect(msg.into())
    }

    /// True for errors that signal a bug rather than bad input.
    pub fn is_defect(&self) -> bool {
        matches!(self, Error::Defect(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
