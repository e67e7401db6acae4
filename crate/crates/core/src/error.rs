use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("field characteristic {0} is not prime")]
    NotPrime(u32),
    #[error("unknown arrow \"{0}\"")]
    UnknownArrow(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
    #[error("relation {0} is not a composable path")]
    NotComposable(String),
    #[error("relation {0} has length < 2")]
    ShortRelation(String),
    #[error("duplicate declaration: {0}")]
    Duplicate(String),
    #[error("infinite-dimensional or budget exceeded ({0} paths)")]
    InfiniteDimensional(usize),
    #[error("algebra is not special biserial")]
    NotSpecialBiserial,
    #[error("{0} is not in the ambient context")]
    NotInContext(String),
    #[error("{0} is not tau-rigid in the ambient context")]
    NotTauRigid(String),
    #[error("incompatible objects: {0}")]
    Incompatible(String),
    #[error("inventory too small at bound {bound}: {what}")]
    InventoryTooSmall { bound: usize, what: String },
    #[error("pair is not {0} mutable")]
    Immutable(&'static str),
    #[error("undecided at bound {bound}: {what}")]
    UnknownAtBound { bound: usize, what: String },
    #[error("not a valid tau-exceptional sequence: {0}")]
    InvalidSequence(String),
    #[error("unknown module name \"{0}\"")]
    UnknownModule(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
