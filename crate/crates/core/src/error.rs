use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polygon size m = {0} is out of range (need 3 <= m <= {max})", max = crate::polygon::MAX_M)]
    PolygonSize(usize),

    #[error("vertex {vertex} is out of range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),

    #[error("invalid e-set: {0}")]
    InvalidESet(String),

    #[error("invalid J tuple: {0}")]
    InvalidJ(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("e-set {eset} is not compatible with {class}")]
    Incompatible { eset: String, class: String },

    #[error("{0} and {1} are not adjacent at vertex {2}")]
    NotAdjacent(String, String, usize),

    #[error("e-sets {0} and {1} are not related; the square is not realizable")]
    Unrelated(String, String),

    #[error("puzzle violation: {0}")]
    PuzzleViolation(String),

    #[error("search refused: estimated size {estimate} exceeds limit {limit}")]
    Guard { estimate: String, limit: String },
}
