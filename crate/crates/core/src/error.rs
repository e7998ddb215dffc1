use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex sets overlap at vertex {0}")]
    Overlap(usize),
    #[error("vertex {0} must not belong to the set")]
    VertexInSet(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{oracle} oracle refuses a graph on {n} vertices (limit {limit})")]
    OracleLimit {
        oracle: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("vertex {0} is not simplicial")]
    NotSimplicial(usize),
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("graph is not in the class: {0}")]
    NotInClass(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
