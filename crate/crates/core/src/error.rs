use thiserror::Error;

/// Errors raised by the graph, algebra and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph on {requested} vertices exceeds the capacity of {limit}")]
    Capacity { requested: usize, limit: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph6 error at byte {position}: {message}")]
    Graph6 { position: usize, message: String },

    #[error("polynomials belong to different rings")]
    RingMismatch,

    #[error("point has {got} coordinates but the ring has {expected} variables")]
    PointLength { expected: usize, got: usize },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("weight vector has a zero entry at position {0}")]
    ZeroWeight(usize),

    #[error("expected {expected} values, got {got}")]
    Misaligned { expected: usize, got: usize },

    #[error("polynomial parse error at byte {position}: {message}")]
    PolyParse { position: usize, message: String },

    #[error("Groebner basis budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExhausted(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
