use thiserror::Error;

use crate::hypergraph::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("link vertex {0} must belong to the forbidden set")]
    LinkVertexNotForbidden(Vertex),
    #[error("link is undefined for {0}-uniform hypergraphs")]
    LinkUndefined(usize),
    #[error("a family needs at least one member")]
    EmptyFamily,
    #[error("member {member} has n = {n}, k = {k}; expected n = {expected_n}, k = {expected_k}")]
    FamilyMismatch {
        member: usize,
        n: usize,
        k: usize,
        expected_n: usize,
        expected_k: usize,
    },
    #[error("invalid hypergraph: {0}")]
    Invalid(String),
}

/// Errors from reading the text and structured formats.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Bad parameters passed to a generator or check.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid input: {0}")]
pub struct InputError(pub String);

impl From<crate::binomial::ArithmeticError> for InputError {
    fn from(e: crate::binomial::ArithmeticError) -> Self {
        InputError(e.to_string())
    }
}

impl From<HypergraphError> for InputError {
    fn from(e: HypergraphError) -> Self {
        InputError(e.to_string())
    }
}
