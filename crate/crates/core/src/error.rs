use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graphs are limited to 64 vertices (requested {0})")]
    TooManyVertices(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex set uses bits outside 0..{n}")]
    SetOutOfRange { n: usize },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("{what} exceeds the enumeration cap ({limit})")]
    CapExceeded { what: String, limit: String },

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is not {0}-regular")]
    NotRegularOfDegree(usize),

    #[error("vertex {0} is isolated; open neighborhoods would be empty")]
    IsolatedVertex(usize),

    #[error("coloring condition: {0}")]
    Condition(String),

    #[error("activation: {0}")]
    Activation(String),

    #[error("multiset of size {actual} does not match requested size {expected}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("the structure family is empty, entropy is undefined")]
    EmptyFamily,

    #[error("catalog line {line}: {source}")]
    Catalog {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    /// True for errors raised by an enumeration guard rather than bad input.
    pub fn is_cap_exceeded(&self) -> bool {
        match self {
            Error::CapExceeded { .. } => true,
            Error::Catalog { source, .. } => source.is_cap_exceeded(),
            _ => false,
        }
    }
}
