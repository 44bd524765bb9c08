use std::io;

use thiserror::Error;

/// Errors raised by graph operations, searches and catalog handling.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {{{0}, {1}}} is not present")]
    EdgeNotPresent(usize, usize),
    #[error("vertex {0} is not present")]
    VertexNotPresent(usize),
    #[error("invalid edge {{{0}, {1}}}: {2}")]
    InvalidEdge(usize, usize, &'static str),
    #[error("graph has {vertices} vertices, limit is {limit}")]
    GraphTooLarge { vertices: usize, limit: usize },
    #[error("{what}: search budget of {budget} nodes exceeded")]
    ResourceLimit { what: &'static str, budget: u64 },
    #[error("vertices {0:?} do not form a triangle")]
    NotATriangle([usize; 3]),
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    DegreeNotThree { vertex: usize, degree: usize },
    #[error("malformed rotation: {0}")]
    MalformedRotation(String),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("cycle has homology {found}, expected {expected}")]
    HomologyMismatch { expected: u8, found: u8 },
    #[error("cycle enumeration exceeded the cap of {0} cycles")]
    CycleBudgetExceeded(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("drawing is not in the required case: {0}")]
    CaseMismatch(&'static str),
    #[error("graph is not planar")]
    NotPlanar,
    #[error("catalog entry missing: {0}")]
    CatalogMissing(String),
    #[error("catalog entry {name}: {msg}")]
    CatalogInvalid { name: String, msg: String },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("candidate {name}: {source}")]
    Candidate { name: String, source: Box<Error> },
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl Error {
    /// Tags an error with the input it arose from.
    pub fn for_candidate(self, name: impl Into<String>) -> Error {
        Error::Candidate { name: name.into(), source: Box::new(self) }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
