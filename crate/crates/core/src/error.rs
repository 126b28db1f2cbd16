use thiserror::Error;

/// Errors raised by graph construction, the algebraic routines and the
/// text/descriptor parsers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(usize, usize),

    #[error("graphs are limited to {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),

    #[error("vertex set must be nonempty")]
    EmptyVertexSet,

    #[error("invalid family parameter: {0}")]
    InvalidFamily(String),

    #[error("glued vertices do not form a clique in graph {0}")]
    NotAClique(usize),

    #[error("invalid glue: {0}")]
    InvalidGlue(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("variable index {index} out of range (only {len} variables)")]
    VariableOutOfRange { index: usize, len: usize },

    #[error("binomial terms are equal")]
    EqualTerms,

    #[error("binomial {0} is not in the cut ideal")]
    NotInKernel(String),

    #[error("exponent overflow")]
    Overflow,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("descriptor: {0}")]
    Descriptor(String),

    #[error("refusing graph with {n} vertices (limit {limit}); pass the override to force")]
    ResourceGuard { n: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
