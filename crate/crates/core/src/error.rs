use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph has {0} vertices; at most 64 are supported")]
    TooManyVertices(usize),

    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),

    #[error("graph parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("input is not a tree")]
    NotATree,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{n} vertices exceeds the exact independence-number cutoff of {cutoff}")]
    TooLarge { n: usize, cutoff: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("search budget of {budget} nodes exhausted")]
    Inconclusive { budget: u64 },

    #[error("malformed witness: {0}")]
    Witness(String),

    #[error("catalog error: {0}")]
    Catalog(String),

    #[error("missing catalog entry {0}")]
    MissingCatalogEntry(String),

    #[error("catalog entry {key} contradicts the Turán lower bound {bound}")]
    TuranContradiction { key: String, bound: u64 },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
