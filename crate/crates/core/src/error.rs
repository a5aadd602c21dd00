use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incomparable weights: {0} vs {1}")]
    IncomparableWeights(usize, usize),

    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("not a Richardson orbit: {0}")]
    NotRichardson(String),

    #[error("inexact polynomial division")]
    InexactDivision,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("inconsistent recursion at rank {rank}, i = {i}: {reason}")]
    InconsistentRecursion { rank: usize, i: usize, reason: String },

    #[error("no nontrivial equivariant local system on {0}")]
    NoNontrivialSystem(String),

    #[error("not in Springer image: {0}")]
    NotInSpringerImage(String),

    #[error("example ranges degenerate for n = {0} (need n >= 3)")]
    DegenerateExample(usize),

    #[error("table mismatch: {0}")]
    Mismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
