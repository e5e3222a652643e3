use thiserror::Error;

/// Errors produced by graph ingestion, exact algebra and the derived operators.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("loop edge at vertex {0} is not supported")]
    LoopEdge(usize),

    #[error("endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("degree bound {bound} is too small: probe point {probe} disagrees with the interpolant")]
    InconsistentBound { bound: usize, probe: usize },

    #[error("exact division left a nonzero remainder {remainder}")]
    NonzeroRemainder { remainder: String },

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("weight at ({row}, {col}) is not on an arc")]
    WeightSupport { row: usize, col: usize },

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("root finding did not converge after {iterations} iterations (max correction {max_step:e})")]
    NoConvergence { iterations: usize, max_step: f64 },

    #[error("value out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
