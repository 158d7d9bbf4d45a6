use thiserror::Error;

/// Errors reported by the domain operations.
///
/// Parse failures are the caller handing us malformed text; everything else
/// is a precondition of the underlying combinatorics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {input:?}: {reason}")]
    InvalidPartition { input: String, reason: String },

    #[error("invalid bipartition {input:?}: expected two partitions separated by '|'")]
    InvalidBipartition { input: String },

    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: u32, right: u32 },

    #[error("rank {rank} is below the weight {weight} of the bipartition")]
    RankBelowWeight { rank: u32, weight: u32 },

    #[error("stable range violated: l = {l} < 2*lp = {}", 2 * lp)]
    StableRange { l: u32, lp: u32 },

    #[error("beta-set cardinality {t} is below the number of parts {parts}")]
    BetaCardinality { t: u32, parts: u32 },

    #[error("2-quotient parameter t = {0} must be odd")]
    QuotientParameterEven(u32),

    #[error("{0} is not a symplectic partition (odd parts must have even multiplicity)")]
    NotSymplectic(String),

    #[error("u-symbol rows do not encode a bipartition")]
    MalformedUSymbol,

    #[error("2-core of {partition} is {core}, expected the staircase {expected}")]
    CoreMismatch {
        partition: String,
        core: String,
        expected: String,
    },

    #[error("no cuspidal unipotent index: k = 0 has no predecessor in the requested tower")]
    NoFirstOccurrence,

    #[error("rank formulas give an invalid value: {0}")]
    InvalidRank(String),

    #[error("family {0} is not covered by the correspondence formulas")]
    UnsupportedFamily(String),

    #[error("unknown case {0:?}: expected one of so1, so2, u1, u2")]
    UnknownCase(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
