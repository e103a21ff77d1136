use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("alpha must lie in {range}, got {alpha}")]
    InvalidAlpha { alpha: f64, range: &'static str },

    #[error("sample must contain at least one atom")]
    EmptySample,

    #[error("values and probabilities have different lengths ({values} vs {probabilities})")]
    LengthMismatch { values: usize, probabilities: usize },

    #[error("probabilities must be strictly positive and sum to 1 (sum = {sum})")]
    InvalidProbabilities { sum: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is singular or near-singular (|det| = {det})")]
    SingularMatrix { det: f64 },

    #[error("unsupported cone: {0}")]
    UnsupportedCone(String),

    #[error("sample has {n} atoms, vertex enumeration supports at most {max}")]
    SizeLimit { n: usize, max: usize },

    #[error("operation not available for dimension {0}")]
    UnsupportedDimension(usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
