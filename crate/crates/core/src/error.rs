use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} has {size} vertices; every edge needs at least 2")]
    EdgeTooSmall { edge: usize, size: usize },

    #[error("edge {edge} contains vertex {vertex}, outside 0..{n}")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },

    #[error("edge {edge} lists vertex {vertex} more than once")]
    RepeatedVertex { edge: usize, vertex: usize },

    #[error("edges {first} and {second} are identical")]
    DuplicateEdge { first: usize, second: usize },

    #[error("edge {inner} is a proper subset of edge {outer}")]
    ContainedEdge { inner: usize, outer: usize },

    #[error("{what} = {value} exceeds the supported maximum {max}")]
    TooLarge {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("rho is undefined for hypergraphs with fewer than 2 edges")]
    RhoUndefined,

    #[error("gamma is undefined for non-uniform hypergraphs")]
    GammaUndefined,

    #[error("operation requires a uniform hypergraph")]
    NonUniform,

    #[error("budget exceeded: {what} needs {required}, cap is {cap}")]
    BudgetExceeded {
        what: &'static str,
        required: String,
        cap: String,
    },

    #[error("invalid edge ordering: {0}")]
    InvalidEta(String),

    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),

    #[error("edge index {edge} out of range for {m} edges")]
    EdgeIndexOutOfRange { edge: usize, m: usize },

    #[error("wrong regime: {0}")]
    WrongRegime(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("argument outside domain: {0}")]
    DomainError(String),

    /// The broken-cycle expansion produced an impossible count. Only seen
    /// on hypergraphs with mixed edge sizes.
    #[error("the broken-cycle expansion gives {0}, which is not a count")]
    NegativeExpansion(String),
}

impl Error {
    pub(crate) fn budget(what: &'static str, required: impl ToString, cap: impl ToString) -> Self {
        Error::BudgetExceeded {
            what,
            required: required.to_string(),
            cap: cap.to_string(),
        }
    }
}
