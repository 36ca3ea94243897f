use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {k} out of range 1..={m}")]
    RankOutOfRange { k: usize, m: usize },

    #[error("unknown alternative index {index} (m = {m})")]
    UnknownAlternative { index: usize, m: usize },

    #[error("unknown alternative label `{0}`")]
    UnknownLabel(String),

    #[error("preference index {index} out of range (domain has {len} preferences)")]
    UnknownPreference { index: usize, len: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("orders are over different alternative sets (m = {left} vs m = {right})")]
    MismatchedAlternatives { left: usize, right: usize },

    #[error("not a linear order: {0}")]
    InvalidOrder(String),

    #[error("invalid alternative set: {0}")]
    InvalidAlternatives(String),

    #[error("duplicate preference: P{first} and P{second} are the same order")]
    DuplicatePreference { first: usize, second: usize },

    #[error("domain has no preferences")]
    EmptyDomain,

    #[error("requires m >= {required} alternatives, domain has m = {m}")]
    TooFewAlternatives { m: usize, required: usize },

    #[error("construction precondition violated: {0}")]
    Construction(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown fixture `{name}`; available: {available}")]
    UnknownFixture { name: String, available: String },

    #[error("search: {0}")]
    Search(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}
