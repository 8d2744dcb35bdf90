use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {index} out of range for a graph of order {order}")]
    VertexOutOfRange { index: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("operation needs order >= {required}, got {order}")]
    OrderTooSmall { order: usize, required: usize },

    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is connected")]
    Connected,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("eigen residual {residual:e} exceeds acceptance bound {limit:e}")]
    ResidualTooLarge { residual: f64, limit: f64 },

    #[error("edge ({0}, {1}) is already present")]
    EdgePresent(usize, usize),

    #[error("vectors must sum to zero (sums {0:e} and {1:e})")]
    NonZeroSum(f64, f64),

    #[error("case precondition violated: {0}")]
    Precondition(String),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("invalid family {name} of order {order}: {reason}")]
    Family {
        name: String,
        order: usize,
        reason: String,
    },

    #[error("empty collection")]
    Empty,

    #[error("probability {0} is outside [0, 1]")]
    Probability(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
