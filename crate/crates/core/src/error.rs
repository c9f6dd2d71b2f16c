use thiserror::Error;

/// Errors shared by every module of the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    BadExtensionDegree,
    #[error("field cardinality p^m overflows 64 bits")]
    FieldTooLarge,
    #[error("invalid modulus: {0}")]
    BadModulus(String),
    #[error("modulus polynomial is reducible")]
    ReducibleModulus,
    #[error("element {value} out of range for a field of {q} elements")]
    ElementOutOfRange { value: u64, q: u64 },
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    MixedFields,

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("column index {index} out of range for {cols} columns")]
    ColumnOutOfRange { index: usize, cols: usize },
    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("block matrix is not square: set sizes sum to {sum}, expected {expected}")]
    BlockNotSquare { sum: usize, expected: usize },

    #[error("subset collection: {0}")]
    BadCollection(String),
    #[error("a subset has {size} elements, larger than k = {k}")]
    SubsetTooLarge { size: usize, k: usize },
    #[error("ell must be at least {min}, got {got}")]
    EllTooSmall { got: usize, min: usize },
    #[error("ambient size {0} too large for set enumeration")]
    AmbientTooLarge(usize),

    #[error("dimension k = {k} exceeds length n = {n}")]
    KExceedsN { k: usize, n: usize },
    #[error("invalid code: {0}")]
    BadCode(String),
    #[error("evaluation points are not pairwise distinct")]
    RepeatedPoints,
    #[error("operation requires k >= 2, code has k = 1")]
    DimensionTooSmall,
    #[error("cannot puncture: length already equals dimension")]
    LengthAtDimension,

    #[error("list size L = {l} must satisfy 1 <= L < q = {q}")]
    BadListSize { l: u64, q: u64 },
    #[error("problem too large: {estimate}")]
    TooLarge { estimate: String },

    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field size q = {q} is smaller than n = {n}")]
    FieldSmallerThanN { q: u64, n: u64 },

    #[error("sampling prime {prime} is not larger than twice the degree budget {budget}")]
    SamplingPrimeTooSmall { prime: u64, budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
