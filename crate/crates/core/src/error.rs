use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} exceeds cap: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("expected a {expected}-uniform hypergraph")]
    NotUniform { expected: usize },

    #[error("input has repeated hyperedges; a simple graph is required")]
    NotSimple,

    #[error("improper coloring: {0}")]
    ImproperColoring(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn cap(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::CapExceeded {
            what,
            limit,
            actual,
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
