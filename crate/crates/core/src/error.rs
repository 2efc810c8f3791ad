use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is on the cycle")]
    OnCycle(crate::graph::Vertex),
    #[error("{0} is not on the cycle")]
    NotOnCycle(crate::graph::Vertex),
    #[error("no path through the component")]
    NoPath,
    #[error("search budget of {budget} node expansions exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("segment view needs exactly three connectors, found {0}")]
    NotThreeConnectors(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
