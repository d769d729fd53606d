use thiserror::Error;

use crate::graph::MAX_VERTICES;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("{requested} vertices exceed the capacity of {MAX_VERTICES}")]
    CapacityExceeded { requested: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertices {0} and {1} are in different components")]
    UnreachablePair(usize, usize),
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("graph needs at least {min} vertices, has {n}")]
    TooFewVertices { min: usize, n: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),
    #[error("strong product needs nonempty factors")]
    EmptyFactor,
    #[error("strong product needs at least one factor")]
    NoFactors,
    #[error("inconsistent partial tuple: {0}")]
    InconsistentTuple(String),
    #[error("brute force limited to {limit} vertices, graph has {n}")]
    OracleLimit { limit: usize, n: usize },
    #[error("graph is not a block graph")]
    NotBlockGraph,
    #[error("graph is not a cactus")]
    NotCactus,
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("constructed set failed verification: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
