use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge endpoint {endpoint} out of range for {vertex_count} vertices")]
    EndpointOutOfRange { endpoint: usize, vertex_count: usize },

    #[error("graph has {edges} edges; edge subsets are capped at {cap}")]
    TooManyEdges { edges: usize, cap: usize },

    #[error("exhaustive enumeration needs at most {cap} {what}, got {actual}")]
    ExhaustiveCap {
        what: &'static str,
        cap: usize,
        actual: usize,
    },

    #[error("edge {0} does not exist")]
    NoSuchEdge(usize),

    #[error("edge {edge} is {detail}")]
    EdgeMembership { edge: usize, detail: &'static str },

    #[error("not a maximal spanning forest: {0}")]
    NotMaximalForest(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid combinatorial map: {0}")]
    InvalidMap(String),

    #[error("invalid decision tree: {0}")]
    InvalidDecisionTree(String),

    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),

    #[error("theorem violated: {0}")]
    TheoremViolation(String),
}
