use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the toolkit reports. The variant name doubles as the
/// machine-readable error tag emitted by the command-line frontend.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("vertex `{0}` is listed more than once")]
    DuplicateVertex(String),
    #[error("edge {0} is empty")]
    EmptyEdge(usize),
    #[error("edges {0} and {1} have the same vertex set")]
    DuplicateEdge(usize, usize),
    #[error("edge name `{0}` is used more than once")]
    DuplicateEdgeName(String),
    #[error("expected {expected} edge names, found {found}")]
    EdgeNameCount { expected: usize, found: usize },

    #[error("vertex `{0}` lies in no edge")]
    IsolatedVertex(String),
    #[error("vertices `{0}` and `{1}` lie in exactly the same edges")]
    DuplicateStar(String, String),
    #[error("double dual does not reproduce the hypergraph: {0}")]
    NotInvolutive(String),

    #[error("malformed sequence: {0}")]
    MalformedSequence(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("`{0}` does not belong to edge `{1}`")]
    InvalidPair(String, String),
    #[error("vertex `{0}` has too few neighbours inside the chosen subgraph")]
    DegreeTooLow(String),

    #[error("block {0} of the vertex sequence is not an edge")]
    NotAnEdge(usize),
    #[error("a loose path of {k}-edges cannot have {len} vertices")]
    BadLength { len: usize, k: usize },
    #[error("vertex `{0}` is repeated")]
    RepeatedVertex(String),
    #[error("no label for `{0}`")]
    MissingLabel(String),
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("{size} labeled elements exceed the search bound {bound}")]
    TooLarge { size: usize, bound: usize },

    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid JSON input: {0}")]
    Parse(String),
}

impl Error {
    /// Stable tag for the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::UnknownVertex(_) => "UnknownVertex",
            Error::UnknownEdge(_) => "UnknownEdge",
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::EmptyEdge(_) => "EmptyEdge",
            Error::DuplicateEdge(..) => "DuplicateEdge",
            Error::DuplicateEdgeName(_) => "DuplicateEdgeName",
            Error::EdgeNameCount { .. } => "EdgeNameCount",
            Error::IsolatedVertex(_) => "IsolatedVertex",
            Error::DuplicateStar(..) => "DuplicateStar",
            Error::NotInvolutive(_) => "NotInvolutive",
            Error::MalformedSequence(_) => "MalformedSequence",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::InvalidPair(..) => "InvalidPair",
            Error::DegreeTooLow(_) => "DegreeTooLow",
            Error::NotAnEdge(_) => "NotAnEdge",
            Error::BadLength { .. } => "BadLength",
            Error::RepeatedVertex(_) => "RepeatedVertex",
            Error::MissingLabel(_) => "MissingLabel",
            Error::InvalidLabeling(_) => "InvalidLabeling",
            Error::TooLarge { .. } => "TooLarge",
            Error::InfeasibleParameters(_) => "InfeasibleParameters",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::Parse(_) => "ParseError",
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}
