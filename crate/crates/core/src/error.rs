use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed window {0:?}")]
    MalformedWindow(String),
    #[error("malformed word {0:?}")]
    MalformedWord(String),
    #[error("invalid window {window:?}: absolute values must be exactly 1..={n}")]
    InvalidWindow { window: Vec<i32>, n: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("generator s{index} out of range for {ty} of rank {rank}")]
    GeneratorOutOfRange { index: u8, ty: &'static str, rank: usize },
    #[error("word {0} is not reduced")]
    NotReduced(String),
    #[error("{0} is not fully commutative")]
    NotFullyCommutative(String),
    #[error("{0} is not an unsigned permutation")]
    NotUnsigned(String),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("partition {0} has a nonempty 2-core")]
    NonEmptyTwoCore(String),
    #[error("tableau does not collapse into dominoes: {0}")]
    NotCollapsible(String),
    #[error("repeated entry {0} in insertion word")]
    RepeatedEntry(i32),
    #[error("truncation m = {m} is smaller than degree n = {n}")]
    TruncationTooSmall { m: usize, n: usize },
    #[error("basis is linearly dependent (rank {rank} < {len})")]
    DependentBasis { rank: usize, len: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("coefficient overflow")]
    Overflow,
    #[error("invalid quasi-symmetric function: {0}")]
    InvalidQSym(String),
    #[error("heap with {0} elements is too large for linear-extension counting")]
    HeapTooLarge(usize),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
}

pub type Result<T> = std::result::Result<T, Error>;
