use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} exceeds the 64-vertex cap")]
    VertexCapExceeded(usize),
    #[error("vertex index {index} out of range for a graph on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("operation requires a nonempty graph (at least one edge)")]
    EmptyGraph,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("target has isolated vertices; reduce to its isolate-free core first")]
    TargetHasIsolates,
    #[error("host has {edges} edges, above the cap of {cap} for this search")]
    EdgeCapExceeded { edges: usize, cap: usize },
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no feasible pendant vector for alpha={alpha} at N={n}: {reason}")]
    InfeasibleFamily {
        alpha: String,
        n: u64,
        reason: String,
    },
}
