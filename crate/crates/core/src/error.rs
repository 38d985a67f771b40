use thiserror::Error;

/// Errors shared by all operations in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An enumeration grew past its configured limit.
    #[error("budget exceeded in {stage}: more than {limit} items")]
    BudgetExceeded { stage: &'static str, limit: usize },

    #[error("at most {max} vertices are supported, got {n}")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("{u} and {v} are not adjacent")]
    NotAnEdge { u: usize, v: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("the vertex set S must be nonempty")]
    EmptySet,

    #[error("graph is not triangle-free")]
    NotTriangleFree,

    #[error("graph is not split")]
    NotSplit,

    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
