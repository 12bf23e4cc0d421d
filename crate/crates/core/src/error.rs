use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no points")]
    NoPoints,
    #[error("relaxation undefined for a polygon of dimension {0}")]
    RelaxationUndefined(usize),
    #[error("matrix has determinant {0}, expected 1 or -1")]
    NotUnimodular(i64),
    #[error("polygon is hyperelliptic")]
    Hyperelliptic,
    #[error("polygon is not maximal")]
    NotMaximal,
    #[error("polygon must be two-dimensional")]
    Degenerate,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("egg {0} is empty or does not induce a connected subgraph")]
    BadEgg(usize),
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("no crystal of length {0}")]
    NoCrystal(i64),
    #[error("falsified: {0}")]
    Falsified(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
