use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inputs outside the domain of the requested computation.
    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("generator mismatch: {left} vs {right}")]
    GeneratorMismatch { left: &'static str, right: &'static str },

    #[error("dimension mismatch: class has exponent {exponent}, space has dimension {dim}")]
    DimensionMismatch { exponent: u32, dim: u32 },

    #[error("unsupported space: {0}")]
    UnsupportedSpace(String),

    #[error("Chern series truncated at order {available}, need order {needed}")]
    Truncation { needed: usize, available: usize },

    #[error("no solution: {0}")]
    NoSolution(String),

    /// A computed quantity contradicts a proven identity. Always a bug or a
    /// corrupted input, never a user error.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}
