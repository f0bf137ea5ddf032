use thiserror::Error;

/// Everything that can go wrong while building or running the construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("cover relation has a cycle through {0}")]
    Cycle(String),

    #[error("cover {upper}>{lower} is implied by the other covers")]
    RedundantCover { upper: String, lower: String },

    #[error("element {0} occurs in no covering pair")]
    IsolatedElement(String),

    #[error("vector has {found} entries, expected one per cover ({expected})")]
    KeyMismatch { expected: usize, found: usize },

    #[error("vector is not compatible")]
    IncompatibleVector,

    #[error("vectors are not ordered: u is not below v")]
    NotOrdered,

    #[error("not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("complement set in block {0} has no unique maximum")]
    NoUniqueMaximum(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    #[error("algorithm did not terminate after {0} cuts")]
    Divergence(usize),

    #[error("{candidates} candidate vectors exceed the cap of {cap}")]
    SizeLimit { candidates: u128, cap: u128 },

    #[error("not a lattice: {0}")]
    NotALattice(String),
}

pub type Result<T> = std::result::Result<T, Error>;
