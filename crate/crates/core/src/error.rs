use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by lattice operations on malformed or out-of-contract input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: lattice rank {rank}, vector length {len}")]
    DimensionMismatch { rank: usize, len: usize },
    #[error("gram matrix is not square: row {row} has {len} entries, expected {rank}")]
    RaggedGram { row: usize, len: usize, rank: usize },
    #[error("gram matrix is not symmetric at ({row},{col})")]
    AsymmetricGram { row: usize, col: usize },
    #[error("labels: expected {rank} entries, found {len}")]
    LabelCount { rank: usize, len: usize },
    #[error("labels: duplicate entry `{0}`")]
    DuplicateLabel(String),
    #[error("primitivity is undefined for the zero vector")]
    ZeroVector,
    #[error("expected a rank-2 lattice, got rank {0}")]
    NotRankTwo(usize),
    #[error("empty vector list")]
    EmptyVectors,
    #[error("search bound must be at least 1")]
    ZeroBound,
    #[error("ample class must have positive square, got {0}")]
    NotAmple(BigInt),
    #[error("Beauville extension requires n >= 2, got {0}")]
    BadExtensionOrder(u32),
    #[error("operation is only defined on S^[2] (n = 2), got n = {0}")]
    UnsupportedOrder(u32),
    #[error("reflecting class must have square 2 in the Beauville form, got {0}")]
    ReflectorSquare(BigInt),
    #[error("Picard-Lefschetz reflection requires a (-2)-class, got square {0}")]
    NotMinusTwo(BigInt),
    #[error("self-intersection must be even, got {0}")]
    OddSquare(BigInt),
    #[error("self-intersection must be at least -2, got {0}")]
    SquareBelowMinusTwo(BigInt),
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("n must be at least {min}, got {got}")]
    OrderTooSmall { min: u64, got: u64 },
    #[error("surface Kodaira dimension must be -infinity, 0, 1 or 2, got {0}")]
    BadSurfaceKodaira(u64),
    #[error("inconsistent intersection data: {0}")]
    InconsistentInequality(String),
    #[error("polarization degree {0} is not of the form 2m^2")]
    DegreeNotTwiceSquare(BigInt),
    #[error("polarization square must be positive and even, got {0}")]
    BadPolarization(BigInt),
    #[error("lattice signature {0} is not the Hodge-index shape (1, rank-1, 0)")]
    HodgeIndexViolation(String),
    #[error("class must have positive square, got {0}")]
    NonPositiveSquare(BigInt),
}

pub type Result<T> = std::result::Result<T, Error>;
