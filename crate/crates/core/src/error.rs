use std::fmt;

use thiserror::Error;

/// An induced copy of a forbidden pattern, reported when an input falls
/// outside the class a solver requires.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassViolation {
    /// Name of the pattern that was found, e.g. `P4` or `2P1+P3`.
    pub pattern: String,
    /// Vertices of the input graph inducing the pattern, in pattern order.
    pub witness: Vec<usize>,
}

impl fmt::Display for ClassViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "induced {} on vertices {:?}", self.pattern, self.witness)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is outside the solver's class: {0}")]
    NotInClass(ClassViolation),
    #[error("pattern has {0} vertices, at most 12 are supported")]
    PatternTooLarge(usize),
    #[error("instance has {n} vertices, the limit for this routine is {limit}")]
    InstanceTooLarge { n: usize, limit: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("gave up after {draws} draws: {diagnostics}")]
    GiveUp { draws: usize, diagnostics: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
