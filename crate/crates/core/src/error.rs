use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid graph size for {kind}: {detail}")]
    InvalidSize { kind: &'static str, detail: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),

    #[error("malformed edge list at line {line}: {detail}")]
    EdgeListParse { line: usize, detail: String },

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not maximal planar")]
    NotMaximalPlanar,

    #[error("graph is not maximal outer-planar")]
    NotMaximalOuterPlanar,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e}, estimate {q})")]
    NoConvergence { iterations: usize, residual: f64, q: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("hypothesis unmet for {construction}: {detail}")]
    HypothesisUnmet { construction: &'static str, detail: String },

    #[error("fixture {kind} failed its degree census: {detail}")]
    FixtureCensus { kind: &'static str, detail: String },

    #[error("planar_code parse error at byte {offset}: {detail}")]
    PlanarCode { offset: usize, detail: String },

    #[error("swap plan does not match graph: {0}")]
    PlanMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
