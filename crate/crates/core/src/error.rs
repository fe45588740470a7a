use thiserror::Error;

/// Errors raised by graph construction, parsing and the convexity engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is trivial (fewer than two vertices)")]
    Trivial,
    #[error("graph is complete")]
    Complete,
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("expected {expected} corona factors, got {got}")]
    FactorCount { expected: usize, got: usize },
    #[error("operation not supported for {0} products")]
    WrongProductKind(&'static str),
    #[error("search space too large: {0}")]
    Infeasible(String),
    #[error("invalid corpus spec: {0}")]
    Spec(String),
    #[error("unknown check: {0}")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
