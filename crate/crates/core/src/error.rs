use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Integrality and consistency checks on catalog data are theorems, so the
/// corresponding variants indicate corrupted input or a bug, never a
/// recoverable condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate interpolation nodes")]
    DegenerateNodes,
    #[error("empty interpolation data")]
    EmptyInterpolation,
    #[error("insufficient series order: have {have}, need {need}")]
    InsufficientOrder { have: usize, need: usize },
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("unknown Lie type {0:?}")]
    ParseLieType(String),
    #[error("rank out of catalog range: {family}{rank}")]
    RankOutOfRange { family: char, rank: u32 },
    #[error("Vogel parameters inconsistent: t = {t} but alpha + beta + gamma = {sum}")]
    VogelSum { t: String, sum: String },
    #[error("degenerate Vogel normalization")]
    DegenerateNormalization,
    #[error("zero scale")]
    ZeroScale,
    #[error("not a simple Lie algebra parameter point: {0}")]
    NotSimplePoint(String),

    #[error("parameters not from a simple Lie algebra: {0}")]
    NotFromSimpleAlgebra(String),
    #[error("invalid parameter point: {0}")]
    InvalidParameterPoint(String),
    #[error("interpolation does not extend: parameters not polynomial-consistent (k = {k})")]
    InterpolationDoesNotExtend { k: usize },
    #[error("series is not rational of expected pole order: {0}")]
    NotRational(String),
    #[error("inconsistent N: dim I_{k} would be {value}")]
    InconsistentN { k: usize, value: String },
    #[error("zero divisor in {0}")]
    ZeroDivisor(&'static str),
    #[error("coefficient pole at k = {k}: {context}")]
    Pole { k: usize, context: String },

    #[error("singular hypergeometric parameters: lower parameter {0}")]
    SingularHypergeometric(String),
    #[error("index {k} out of range 1..={max}")]
    IndexOutOfRange { k: usize, max: usize },
    #[error("arity mismatch: expected {expected_upper}F{expected_lower}, got {upper}F{lower}")]
    ArityMismatch { expected_upper: usize, expected_lower: usize, upper: usize, lower: usize },

    #[error("zero root in coroot pairing")]
    ZeroRoot,
    #[error("root system construction bug: {0}")]
    RootSystemBug(String),
}
