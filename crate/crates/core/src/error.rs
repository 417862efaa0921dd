use thiserror::Error;

/// Errors shared across the crate. Every computation is exact, so these all
/// describe contract violations, never numerical trouble.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected n = {expected}, found n = {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("polynomial is not base-homogeneous (base degrees {degrees:?})")]
    NonHomogeneous { degrees: Vec<u32> },

    #[error("polynomial is not monogenic: applying the Dirac operator gives a nonzero result")]
    NotMonogenic,

    #[error("argument out of range: {0}")]
    ArgOutOfRange(String),

    #[error("operation requires gaussian scalar mode (the imaginary unit is unavailable)")]
    GaussianModeRequired,

    #[error("size cap exceeded at (k = {k}, dmax = {d}): domain dimension {dim} > cap {cap}")]
    SizeCap {
        k: usize,
        d: usize,
        dim: usize,
        cap: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
