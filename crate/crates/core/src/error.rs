use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid parameters m={m}, n={n}, r={r}: need m >= 1, n >= 2, 0 <= r < n")]
    InvalidParameters { m: usize, n: usize, r: usize },
    #[error("graph already carries an apex vertex")]
    AlreadyJoined,
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("malformed graph description: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("block {block} outside 1..={blocks}")]
    BlockOutOfRange { block: usize, blocks: usize },
    #[error("position {pos} outside 1..={len}")]
    PositionOutOfRange { pos: usize, len: usize },
    #[error("compound sequences need m >= 2, got {0}")]
    TooShort(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignError {
    #[error("no sign matrix of order {order} for this family")]
    InvalidOrder { order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MagicError {
    #[error(
        "no magic rectangle of shape {rows}x{cols} is produced here (need odd sides, neither side 1 unless both are)"
    )]
    UnsupportedShape { rows: usize, cols: usize },
    #[error("search for a {rows}x{cols} magic rectangle gave up after {attempts} restarts")]
    SearchExhausted { rows: usize, cols: usize, attempts: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid parameters for {builder}: {reason}")]
    InvalidParameters { builder: &'static str, reason: String },
    #[error("unsupported parameters m={m}, n={n}, r={r}: {reason}")]
    UnsupportedParameters { m: usize, n: usize, r: usize, reason: String },
    #[error("magic rectangle unavailable: {0}")]
    MagicRectangleUnavailable(#[from] MagicError),
    #[error("supplied rectangle rejected: {0}")]
    InvalidOmega(String),
    #[error("report has the wrong shape for this operation: {0}")]
    WrongShape(String),
    #[error("diagonal sum {diag_sum} equals the weight of vertex {vertex}")]
    DiagonalCollision { diag_sum: u64, vertex: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Sign(#[from] SignError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("labeling does not match the graph: {0}")]
    DomainMismatch(String),
    #[error("hole pattern disagrees with adjacency at ({row}, {col})")]
    HolePatternMismatch { row: usize, col: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance has {elements} labelled elements, limit is {limit}")]
    TooLarge { elements: usize, limit: usize },
    #[error("graph needs at least one edge")]
    Degenerate,
    #[error(transparent)]
    Build(#[from] BuildError),
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}
