use thiserror::Error;

use crate::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("weight mismatch: {0} has weight {1} but {2} has weight {3}")]
    WeightMismatch(Partition, usize, Partition, usize),
    #[error("series cutoffs differ: {0} vs {1}")]
    CutoffMismatch(usize, usize),
    #[error("degree {degree} exceeds cutoff {cutoff}")]
    CutoffExceeded { degree: usize, cutoff: usize },
    #[error("series is not invertible: constant term is not the unit")]
    NotInvertible,
    #[error("plethysm inner argument must be Schur-positive with integer coefficients and no constant term")]
    InvalidPlethysmInner,
    #[error("symmetry types differ: {0} vs {1}")]
    SymmetryMismatch(Partition, Partition),
    #[error("unsupported symmetry type {0}")]
    UnsupportedSymmetry(Partition),
    #[error("symmetry type must be a nonempty partition")]
    EmptySymmetry,
    #[error("partition {0} has more than {1} parts")]
    TooManyParts(Partition, usize),
    #[error("cochains are not convolution inverses up to degree {0}")]
    NotConvolutionInverse(usize),
    #[error("coefficient {0} does not fit the target coefficient type")]
    CoefficientOverflow(String),
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("modification relation for {0} failed verification: {1}")]
    RelationFailed(Partition, String),
}
