use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parts must be weakly decreasing (violated at index {index}): {parts:?}")]
    NotDecreasing { index: usize, parts: Vec<u32> },

    #[error("terms must be strictly increasing positive integers: {0:?}")]
    NotIncreasing(Vec<u32>),

    #[error("incompatible ranks: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("partition {0} has odd length")]
    OddLength(Partition),

    #[error("partition {partition} does not fit in {len} parts")]
    TooManyParts { partition: Partition, len: usize },

    #[error("cannot parse partition literal {input:?} at position {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("integer overflow")]
    Overflow,

    #[error("invalid domino tableau: {0}")]
    InvalidTableau(String),

    #[error("cannot parse tableau at line {line}: {message}")]
    TableauParse { line: usize, message: String },

    #[error("shape {shape} is not of the form tau(sigma_+, sigma_-) for sigma = {sigma}")]
    ShapeMismatch { shape: Partition, sigma: Partition },

    #[error("weight mismatch: |nu| = {nu}, |lambda| + |mu| = {sum}")]
    WeightMismatch { nu: u64, sum: u64 },

    #[error("invalid split of {sigma}: {message}")]
    InvalidSplit { sigma: Partition, message: String },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("matrix is not orthogonal (defect {defect:e})")]
    NotOrthogonal { defect: f64 },

    #[error("matrix is not a complex structure (defect {defect:e})")]
    NotComplexStructure { defect: f64 },

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("convex hull: {0}")]
    Hull(String),
}
