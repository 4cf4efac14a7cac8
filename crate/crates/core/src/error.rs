use thiserror::Error;

use crate::decomposition::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid tree decomposition: {}", format_violations(.0))]
    InvalidDecomposition(Vec<Violation>),

    #[error("malformed tree: {0}")]
    MalformedTree(String),

    #[error("{0:?} is not a vertex cover")]
    NotAVertexCover(Vec<usize>),

    #[error("node {node}: process tuple has {found} child states, node has {expected} children")]
    ArityMismatch { node: usize, expected: usize, found: usize },

    #[error("vertex {vertex} has inconsistent membership on tree edge {child} -> {parent}")]
    InconsistentMembership { vertex: usize, child: usize, parent: usize },

    #[error("bag of node {node} has {size} vertices, at most {limit} are supported")]
    BagTooLarge { node: usize, size: usize, limit: usize },

    #[error("guard exceeded: {0}")]
    Guard(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}

fn format_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
