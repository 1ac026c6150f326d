use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Parse(String),

    #[error("e must be at least 2, got {0}")]
    InvalidModulus(i64),

    #[error("level mismatch: expected {expected} components, got {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("sequences have different totals ({left} vs {right}); dominance is undefined")]
    TotalMismatch { left: String, right: String },

    #[error("symbol size {size} is below the minimum {minimum}")]
    SymbolTooSmall { size: usize, minimum: usize },

    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),

    #[error("generator index {index} out of range for level {level}")]
    GeneratorOutOfRange { index: usize, level: usize },

    #[error("charge {0} is not in the strip 0 <= r_j - r_i < e (i < j)")]
    ChargeOutsideStrip(String),

    #[error("no adapted permutation: v = s - m has ties or spread >= e (weight sequence lies on a hyperplane)")]
    NoAdaptedPermutation,

    #[error("the two multipartitions are equal")]
    EqualInputs,

    #[error("distinct multipartitions with identical b-sequences; no perturbation bound is defined")]
    EqualBSequences,

    #[error("multipartitions do not differ by a single {residue}-node")]
    NotSingleNodeExtension { residue: i64 },

    #[error("perturbation step must be positive")]
    NonPositiveEpsilon,
}
