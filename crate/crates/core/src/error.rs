use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid scalar {text:?}: expected p/q, an integer or a finite decimal")]
pub struct ScalarParseError {
    pub text: String,
}

impl ScalarParseError {
    pub(crate) fn new(text: &str) -> Self {
        ScalarParseError { text: text.to_owned() }
    }
}

/// Failures of the simplex engine. None of these is a statement about the LP
/// itself: infeasibility and unboundedness are reported through
/// [`crate::lp::LpStatus`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("malformed LP: {0}")]
    Shape(String),
    #[error("simplex exceeded its iteration cap of {cap} pivots in phase {phase}")]
    IterationLimit { phase: u8, cap: u128 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polytope has no points")]
    Empty,
    #[error("dimension must be positive")]
    ZeroDimension,
    #[error("point {second} duplicates point {first}")]
    DuplicatePoint { first: usize, second: usize },
    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line (plain format) or 1-based point row (structured format).
    pub line: usize,
    pub message: String,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
