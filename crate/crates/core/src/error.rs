use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}: signed graphs must be simple")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("a cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("expected {expected} edge signs, got {got}")]
    SignCount { expected: usize, got: usize },
    #[error("vertex sequence {0:?} is not a cycle of the graph")]
    NotACycle(Vec<usize>),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cycles are not pairwise vertex-disjoint; contraction is undefined")]
    NonDisjointCycles,
    #[error("order {n} outside the enumeration range 1..={cap}")]
    OrderOutOfRange { n: usize, cap: usize },
    #[error("invalid cycle length {0}: lengths must be even and at least 4")]
    InvalidCycleLength(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
