use thiserror::Error;

/// Errors raised by the construction and verification routines.
///
/// Variants are either input errors or [`Error::Invariant`], raised when a
/// computed object fails one of its own cross-checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("undefined Hadamard product: every coordinate product vanishes")]
    UndefinedHadamard,

    #[error("all coordinates are zero")]
    ZeroVector,

    #[error("point {0} has a zero coordinate")]
    ZeroCoordinate(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("invalid h-vector: {0}")]
    HVector(#[from] HVectorError),

    #[error("invalid configuration: {0}")]
    Config(#[from] ConfigError),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Reasons an h-vector is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HVectorError {
    #[error("h-vector is empty")]
    Empty,
    #[error("h_0 must be 1, found {0}")]
    FirstEntry(u64),
    #[error("not symmetric: h_{index} = {left} but h_{mirror} = {right}")]
    NotSymmetric {
        index: usize,
        mirror: usize,
        left: u64,
        right: u64,
    },
    #[error("first difference up to the middle is not an O-sequence: entry {index} = {value} exceeds the Macaulay bound {bound}")]
    NotOSequence {
        index: usize,
        value: i64,
        bound: u64,
    },
    #[error("first difference is negative at index {index} ({value}) before the middle")]
    NegativeDifference { index: usize, value: i64 },
    #[error("codimension-3 requirement: h_1 must be 3, found {0}")]
    Codimension(u64),
    #[error("a_{index} = {value} exceeds s - t + 1 = {limit}")]
    ARange {
        index: usize,
        value: i64,
        limit: i64,
    },
}

/// Reasons a configuration (four points of P^1 plus two index sets) is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("A_{0} has a zero coordinate")]
    ZeroCoordinate(usize),
    #[error("A_{0} and A_{1} are the same point of P^1")]
    NotDistinct(usize, usize),
    #[error("A_{index} lies in the excluded set W (-beta/alpha = {ratio})")]
    InW { index: usize, ratio: String },
    #[error("index set is empty")]
    EmptyIndexSet,
    #[error("index set must start with 0, found {0}")]
    IndexSetStart(u64),
    #[error("index set must be strictly increasing at position {0}")]
    IndexSetOrder(usize),
    #[error("1 not allowed in index set")]
    IndexSetContainsOne,
    #[error("index set {name} has {have} entries but {need} are required")]
    IndexSetTooShort {
        name: &'static str,
        have: usize,
        need: usize,
    },
    #[error("{0} of P_k or Q_k has a zero coordinate")]
    FamilyZero(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
