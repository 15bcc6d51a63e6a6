use thiserror::Error;

/// Errors raised by the toolkit. Every variant describes a domain-level
/// rejection; none of them are used for control flow inside the algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid fraction {num}/{den}: {reason}")]
    InvalidFraction {
        num: String,
        den: String,
        reason: &'static str,
    },

    #[error("string entry {value} at position {index} is below 2")]
    EntryBelowTwo { index: usize, value: i64 },

    #[error("empty string of exceptional curves")]
    EmptyString,

    #[error("({n}, {a}) does not define a Wahl singularity: {reason}")]
    InvalidWahlParameters { n: i64, a: i64, reason: &'static str },

    #[error("{0:?} is not a Wahl string")]
    NotWahl(Vec<i64>),

    #[error("singular intersection matrix for string {0:?}")]
    SingularGram(Vec<i64>),

    #[error("K_W^2 = {kw2} must exceed K_S^2 = {ks2} (a Wahl singularity strictly raises K^2 over the minimal model)")]
    KawamataInequality { kw2: i64, ks2: i64 },

    #[error("Lee's bound needs K_S^2 >= 1, got {0}")]
    NonPositiveKs2(i64),

    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),

    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),

    #[error("class {0} is not an integral combination of the requested basis")]
    NotIntegral(String),

    #[error("invalid root system {family}{rank}")]
    InvalidRootSystem { family: char, rank: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("vector is not a weight: pairing with simple root {0} is not an integer")]
    NotAWeight(usize),

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("flop at node {node} not allowed: pairing {pairing} is not negative")]
    FlopNotAllowed { node: usize, pairing: i64 },

    #[error("flop at node {node} leaves the weight system: coefficient would become {coefficient}")]
    LeftWeightSystem { node: usize, coefficient: i64 },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("negative coefficient {value} at node {node}")]
    NegativeCoefficient { node: usize, value: i64 },

    #[error("truncation at degree {cap} is too small to decide {what}")]
    Inconclusive { cap: u32, what: &'static str },

    #[error("curve has order {order} at the origin; blowing up needs at least {needed}")]
    OrderTooLow { order: u32, needed: u32 },

    #[error("graph curve must pass through the origin")]
    GraphNotThroughOrigin,

    #[error("local intersection is infinite: the curve is a component of the branch curve")]
    InfiniteIntersection,

    #[error("unsupported class `{0}` for this base")]
    UnsupportedClass(String),

    #[error("locus specification rejected: {0}")]
    InvalidLocus(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
