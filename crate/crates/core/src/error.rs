use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: unknown vertex `{name}`")]
    UnknownVertex { line: usize, name: String },

    #[error("line {line}: unknown letter `{name}`")]
    UnknownLetter { line: usize, name: String },

    #[error("invalid identifier `{0}`: tokens must be nonempty and free of whitespace")]
    InvalidToken(String),

    #[error("duplicate identifier `{0}`")]
    DuplicateToken(String),

    #[error("the alphabet is empty")]
    EmptyAlphabet,

    #[error("the vertex set is empty")]
    EmptyVertexSet,

    #[error("the graph is empty (nothing survives essentialization)")]
    EmptyGraph,

    #[error("the graph is not essential: vertex `{0}` is stranded")]
    NotEssential(String),

    #[error("vertex index {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("the vertex set is not a strongly connected component")]
    NotStronglyConnected,

    #[error("the component has no internal edge, its period is undefined")]
    NoInternalEdge,

    #[error("the two graphs are over different alphabets")]
    AlphabetMismatch,

    #[error("a periodic block of an eventually periodic point must be nonempty")]
    EmptyPeriod,

    #[error("the point is not in the subshift of the graph")]
    NotInShift,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("window enumeration exceeded the budget of {budget} candidate words")]
    BudgetExceeded { budget: usize },

    #[error("the lengths have greatest common divisor {0}, expected 1")]
    GcdNotOne(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
