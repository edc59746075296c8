use thiserror::Error;

/// Errors raised by the core library.
///
/// Matrix and word positions carried in the variants are 1-based, matching
/// the convention used in input files and reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Cartan matrix must be square and nonempty")]
    NonSquare,
    #[error("diagonal entry a_{0}{0} is not 2")]
    DiagonalNotTwo(usize),
    #[error("off-diagonal entry a_{0}{1} is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("a_{0}{1} and a_{1}{0} must vanish together")]
    ZeroAsymmetry(usize, usize),
    #[error("unsupported rank {rank} for type {family}")]
    UnsupportedRank { family: char, rank: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("indices must satisfy i < j (got i={0}, j={1})")]
    NotStrictlyIncreasing(usize, usize),
    #[error("word must contain at least one letter")]
    EmptyWord,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("integer overflow")]
    Overflow,
    #[error("enumeration exceeds the cap of {cap} points")]
    BoxTooLarge { cap: u64 },
    #[error("Čech oracle supports words of length at most {max} (got {len})")]
    TooLarge { len: usize, max: usize },
    #[error("divisor has nonzero coefficients on the e^- rays; only D = Σ a_i Z_i is supported here")]
    NotInPicardBasis,
    #[error("η is not admissible at index {0}")]
    NotAdmissible(usize),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn checked_add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn checked_sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}
