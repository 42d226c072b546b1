use crate::subset::IndexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix has no entries")]
    Empty,

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("entry ({row}, {col}) is not finite")]
    NonFinite { row: usize, col: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("empty index selection")]
    EmptySelection,

    #[error("dimension {n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("scaling vector component {index} is negative or not finite ({value})")]
    InvalidEta { index: usize, value: f64 },

    #[error("entry ({row}, {col}) is negative ({value})")]
    NegativeEntry { row: usize, col: usize, value: f64 },

    #[error("eigenvalue iteration did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error(
        "block has rank above {max_rank}: the 2x2 minor on rows {rows:?}, cols {cols:?} is {minor}"
    )]
    RankExceeded {
        max_rank: usize,
        rows: [usize; 2],
        cols: [usize; 2],
        minor: f64,
    },

    #[error("{alpha} is not a clan: {reason}")]
    InvalidClan { alpha: IndexSet, reason: String },

    #[error("principal minors differ on {witness}")]
    MinorsDiffer { witness: IndexSet },

    #[error("budget {budget} out of range for dimension {n}")]
    InvalidBudget { budget: usize, n: usize },
}
