use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: malformed token `{token}`")]
    MalformedToken { line: usize, token: String },
    #[error("line {line}: expected {expected} entries, found {found}")]
    RaggedRows {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("empty input")]
    EmptyInput,
    #[error("invalid json: {0}")]
    Json(String),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("row {0} has no nonzero entry")]
    ZeroRow(usize),
    #[error("column {0} has no nonzero entry")]
    ZeroColumn(usize),
    #[error("negative entry at ({0}, {1})")]
    NegativeEntry(usize, usize),
    #[error("balancing did not converge within {0} iterations")]
    NotConverged(usize),
    #[error("support admits no diagonal")]
    NoSupportDiagonal,
    #[error("pattern is not fully indecomposable")]
    NotFullyIndecomposable,
    #[error("matrix is not doubly stochastic")]
    NotDoublyStochastic,
    #[error("pattern is not symmetric")]
    NotSymmetric,
    #[error("pattern is not an RCDS pattern")]
    NotRcdsPattern,
    #[error("linear system is singular")]
    SingularSystem,
    #[error("potentials infeasible at ({row}, {col})")]
    InfeasiblePotentials { row: usize, col: usize },
    #[error("pattern is not {0}-regular")]
    NotRegular(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("line sums of the assembled matrix are not all 1")]
    LineSumsNotOne,
    #[error("enumeration exceeds the limit of {0} diagonals")]
    LimitExceeded(usize),
    #[error("order {0} exceeds the supported maximum of {1}")]
    TooLarge(usize, usize),
}
