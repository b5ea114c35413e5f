use thiserror::Error;

pub type Result<T, E = QuasError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum QuasError {
    #[error("invalid size: {0}")]
    InvalidSize(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("capacity exceeded: {requested} qubits requested, cap is {cap}")]
    Capacity { requested: usize, cap: usize },

    #[error("optimizer initialization failed: {0}")]
    OptimizerInit(String),

    #[error("degenerate baseline: heuristic value is zero")]
    DegenerateBaseline,

    #[error("aggregation error: {0}")]
    Aggregation(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("data error: {0}")]
    Data(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl QuasError {
    /// Process exit code used by the command-line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            QuasError::Config(_) | QuasError::InvalidSize(_) | QuasError::Capacity { .. } => 2,
            _ => 3,
        }
    }
}
