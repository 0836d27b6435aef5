use thiserror::Error;

/// Errors produced by constructors, parsers, maps and enumerators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value {0} appears more than once")]
    DuplicateValue(i32),
    #[error("absolute value {0} appears more than once")]
    DuplicateAbsValue(i32),
    #[error("zero is not a valid signed entry")]
    ZeroEntry,
    #[error("value {value} is outside 1..={n}")]
    ValueOutOfRange { value: i32, n: usize },
    #[error("index {index} is outside 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("label {0} is not in the tree")]
    UnknownLabel(i32),
    #[error("expected {expected} target labels, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("input is not {0}")]
    Precondition(&'static str),
    #[error("size {n} exceeds the enumeration guard of {limit} (use force to override)")]
    GuardExceeded { n: usize, limit: usize },
    #[error("refinement {k} is not valid for {family} at size {n}")]
    InvalidRefinement {
        family: &'static str,
        n: usize,
        k: i32,
    },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
