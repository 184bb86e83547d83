use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("inner partition {inner:?} is not contained in outer partition {outer:?}")]
    NotContained { outer: Vec<usize>, inner: Vec<usize> },

    #[error("shape {0} is not a ribbon")]
    NotRibbon(String),

    #[error("set {set:?} is not contained in [1, {bound}]")]
    SetOutOfRange { set: Vec<usize>, bound: usize },

    #[error("shape has {rows} rows but only {n} were requested")]
    TooManyRows { rows: usize, n: usize },

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("polynomial is not symmetric in alphabet {slot} (variables {var} and {next})")]
    NotSymmetric { slot: usize, var: usize, next: usize },

    #[error("alphabet {slot} has {size} variables but carries degree {degree}")]
    InsufficientAlphabet { slot: usize, size: usize, degree: usize },

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("bound exceeded: {what} = {value} > {bound}")]
    BoundExceeded { what: &'static str, value: usize, bound: usize },

    #[error("not a standard tableau: {0}")]
    NotStandard(String),

    #[error("invalid subnetwork: {0}")]
    InvalidSubnetwork(String),

    #[error("invalid word for ribbon: {0}")]
    InvalidWord(String),

    #[error("compatible orderings disagree: {0}")]
    OrderingDependence(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),
}

pub type Result<T> = std::result::Result<T, Error>;
