use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A dependence that should be one-dimensional with nonzero coefficients
    /// was not. `vertices` names the points involved.
    #[error("degenerate configuration: points {vertices:?} are not in general position")]
    DegenerateConfiguration { vertices: Vec<usize> },

    #[error("invalid dimension {dim}: expected a value in 0..={max}")]
    InvalidDimension { dim: usize, max: usize },

    #[error("face {face:?} uses every vertex of the simplex, its complement is empty")]
    EmptyComplement { face: Vec<usize> },

    #[error("a vertex has no (nonempty) boundary facets")]
    NoBoundary,

    #[error("invalid face {vertices:?}: {reason}")]
    InvalidFace { vertices: Vec<usize>, reason: &'static str },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("invariant requires an odd dimension, got {dim}")]
    WrongParity { dim: usize },

    #[error("faces {a:?} and {b:?} share a vertex")]
    OverlappingSubcomplexes { a: Vec<usize>, b: Vec<usize> },

    #[error("expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("index {index} out of range for {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("gave up after {attempts} attempts to reach general position")]
    RetryCapExceeded { attempts: usize },

    #[error("statement {statement} does not support dimension {dim}")]
    UnsupportedStatementDimension { statement: String, dim: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn mismatch(expected: impl ToString, found: impl ToString) -> Self {
        Error::DimensionMismatch { expected: expected.to_string(), found: found.to_string() }
    }
}
