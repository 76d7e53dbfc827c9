use thiserror::Error;

/// Errors produced by the exact-invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent a_{index} = {value} is invalid: every exponent must be >= 2")]
    InvalidExponent { index: usize, value: i64 },

    #[error("need at least two exponents, got {len}")]
    TooFewExponents { len: usize },

    #[error("derived constant overflowed i64 while computing {what}")]
    Overflow { what: &'static str },

    #[error("time parameter L = {l} is invalid: L must be >= 1")]
    InvalidTime { l: i64 },

    #[error("no Betti data for exponent sub-tuple ({})", fmt_tuple(.sub_tuple))]
    MissingBetti { sub_tuple: Vec<i64> },

    #[error("invalid Betti table entry for key \"{key}\": {reason}")]
    InvalidBettiEntry { key: String, reason: String },

    #[error("invalid Betti table: {0}")]
    InvalidBettiTable(String),

    #[error(
        "degree shift is zero: per-degree dimensions are infinite \
         (the module is a vector space over the field of Laurent series); \
         request an action-bounded table instead"
    )]
    ZeroShiftInfiniteDims,

    #[error(
        "degree window needs a finite period window: the degree shift is zero, \
         so every degree recurs in every action period"
    )]
    NeedsFinitePeriodWindow,

    #[error("strata enumerated only up to L = {supplied}, but L = {required} is required")]
    InsufficientCoverage { required: i64, supplied: i64 },

    #[error("differential status is Unknown ({witnesses} witness pair(s)); cannot form homology table")]
    DifferentialUnknown { witnesses: usize },

    #[error("relation #{index} ({relation}) is not homogeneous: monomial degrees {degrees:?}")]
    InhomogeneousRelation {
        index: usize,
        relation: String,
        degrees: Vec<i64>,
    },

    #[error("relation #{index} has {terms} terms; the monomial-quotient path needs single-monomial relations")]
    MultiTermRelation { index: usize, terms: usize },

    #[error("presentation is invalid: {0}")]
    InvalidPresentation(String),

    #[error(
        "monomial enumeration does not terminate: generator(s) {gens:?} are unbounded \
         with degree sign(s) that keep total degree inside any window"
    )]
    NonTerminatingEnumeration { gens: Vec<String> },

    #[error("Hilbert function did not stabilize at word caps {cap}/{next} in degrees {degrees:?}")]
    Unconverged { cap: u32, next: u32, degrees: Vec<i64> },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn fmt_tuple(t: &[i64]) -> String {
    t.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
