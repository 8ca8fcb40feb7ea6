use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge or arc ({0}, {1})")]
    Duplicate(usize, usize),
    #[error("symmetric arc pair ({0}, {1}) in an oriented graph")]
    SymmetricPair(usize, usize),
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("a cycle needs at least 3 edges, got {0}")]
    CycleTooShort(usize),
    #[error("enumeration bound exceeded: {requested} > {bound}")]
    BoundExceeded { requested: usize, bound: usize },
    #[error("work budget of {budget} search nodes exceeded")]
    WorkBudgetExceeded { budget: u64 },
    #[error("not an oriented path: {0}")]
    NotAPath(String),
    #[error("the empty word cannot be used here")]
    EmptyWord,
    #[error("invalid letter {0:?}; words are written with '>' and '<'")]
    InvalidLetter(char),
    #[error("forbidden set member {0} is disconnected")]
    DisconnectedMember(usize),
    #[error("forbidden set member {0} has no vertices")]
    EmptyMember(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
