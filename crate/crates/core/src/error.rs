use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A syntax error in an element literal, with the byte offset where it was
/// detected.
#[derive(Debug, Clone, PartialEq, Eq)]
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

    pub(crate) fn shifted(mut self, offset: usize) -> Self {
        self.position += offset;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at position {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("arity mismatch: expected {expected} pieces, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<u32>),

    #[error("repeated letter {0}")]
    RepeatedLetter(u32),

    #[error("invalid object: {0}")]
    InvalidObject(String),

    #[error("degree-0 element has no reduced coproduct")]
    DegreeZero,

    #[error("power series must have zero constant term")]
    NonzeroConstantTerm,

    #[error("malformed coproduct: {0}")]
    MalformedCoproduct(String),

    #[error("antipode recursion cannot isolate S(e) with a {0} unit")]
    NonIsolating(&'static str),

    #[error("syntax error {0}")]
    Parse(#[from] ParseError),

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("operation `{op}` is not available for algebra `{algebra}`")]
    Unsupported { op: String, algebra: String },

    #[error("degree {requested} exceeds the resource cap {cap} for `{algebra}`")]
    CapExceeded {
        algebra: String,
        requested: usize,
        cap: usize,
    },
}
