use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at {0}")]
    Pole(String),
    #[error("polynomial does not split into rational linear factors (residual degree {0})")]
    NonLinearFactor(usize),
    #[error("no rational function of degrees ({0}, {1}) fits the samples")]
    InconsistentSamples(usize, usize),
    #[error("invalid index {0}")]
    InvalidIndex(i32),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("tensor dimension {states} exceeds the size limit {limit} (set TY_SIZE_LIMIT to raise it)")]
    SizeLimit { states: u128, limit: u128 },
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("no highest vector of weight {0}")]
    NoHighestVector(String),
    #[error("empty skew space: {0}")]
    EmptySkewSpace(String),
    #[error("expected a one-dimensional space, found dimension {0}")]
    NotOneDimensional(usize),
    #[error("vector is not an eigenvector of {0}")]
    NotEigenvector(String),
    #[error("ratio does not telescope: {0}")]
    UnpairableRoots(String),
    #[error("intersection is infinite in row {0}")]
    InfiniteIntersection(i64),
    #[error("singular matrix")]
    Singular,
    #[error("subspace is not invariant: {0}")]
    NotInvariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
