use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("invalid dimensions n={n}, k={k}")]
    InvalidDimensions { n: usize, k: usize },

    #[error("index ({i}, {j}) out of range for n={n}, k={k}")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        n: usize,
        k: usize,
    },

    #[error("invalid degree {0}: must be at least 1")]
    InvalidDegree(u32),

    #[error("weights are not pairwise distinct")]
    DuplicateWeights,

    #[error("commutation exponent must be positive")]
    InvalidExponent,

    #[error("invalid subspace {indices:?} in dimension {n}")]
    InvalidSubspace { indices: Vec<usize>, n: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("product does not reduce to a polynomial")]
    NotPolynomial,

    #[error("relation is not homogeneous for the variable degrees")]
    NotHomogeneous,

    #[error("torus action violates condition(s) {conditions:?}: {detail}")]
    ConditionViolated { conditions: Vec<u8>, detail: String },

    #[error("partition {partition} does not fit the {rows}x{cols} box")]
    BoxViolation {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("fixed point {0} is not in the support")]
    UnknownFixedPoint(String),

    #[error("presentation has no variable named {0}")]
    MissingVariable(String),

    #[error("monomial list is not closed under the derivation: {0}")]
    IncompleteBasis(String),

    #[error("partition triple has total size {found}, expected {expected}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}
