use thiserror::Error;

use crate::lattice::{LatticePoint, ValidationReport};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid presentation: {0}")]
    InvalidPresentation(ValidationReport),

    /// An internal invariant failed. Seeing this means a bug or an input that
    /// slipped past validation.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("a monomial ideal needs at least one generator")]
    EmptyIdeal,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation is only defined for d = 2 (got d = {0})")]
    NotBivariate(usize),

    #[error("{count} generators exceed the lcm-lattice cap of {cap}")]
    TooManyGenerators { count: usize, cap: usize },

    #[error("lcm lattice exceeds {cap} joins")]
    LatticeTooLarge { cap: usize },

    #[error("sequence enumeration for {point} stopped after {count} sequences (cap {cap})")]
    SequenceCap { point: LatticePoint, count: usize, cap: usize },

    #[error(
        "pair enumeration stopped after {explored} pairs (cap {cap}); sampled upper bound {sampled_upper_bound:?}"
    )]
    PairCap {
        explored: u64,
        cap: u64,
        /// Smallest value seen before the cap; never an exact minimum.
        sampled_upper_bound: Option<i64>,
    },

    #[error("index {index} out of range 0..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{0} is not in the Apery set")]
    NotInAperySet(LatticePoint),

    #[error("{0} and {1} are not equivalent")]
    NotEquivalent(LatticePoint, LatticePoint),
}
