use thiserror::Error;

/// Errors surfaced by the fallible operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cell ({row},{col}) lies outside the diagram")]
    CellOutsideDiagram { row: usize, col: usize },

    #[error("invalid partition: parts must be weakly decreasing")]
    InvalidPartition,

    #[error("invalid strict partition: parts must be strictly decreasing and nonnegative")]
    InvalidStrictPartition,

    #[error("invalid hook shape (n = {n}, k = {k})")]
    InvalidHookShape { n: usize, k: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("entry {0} does not occur in the tableau")]
    EntryNotInTableau(u32),

    #[error("cannot remove the corner of a single-row tableau")]
    CornerOfSingleRow,

    #[error("transposed entries must differ (both are {0})")]
    EqualTransposition(u32),

    #[error("mapping is not a bijection")]
    NotABijection,

    #[error("not divisible: remainder has leading term {leading_term}")]
    NotDivisible { leading_term: String },

    #[error("integral bounds must be two distinct variables")]
    EqualIntegralBounds,

    #[error("exponent vector has length {got}, expected {expected}")]
    ExponentLengthMismatch { got: usize, expected: usize },

    #[error("tableau must be standard for this operation")]
    NotStandard,

    #[error("operator image is not a polynomial at the variable pair ({i},{j})")]
    NotInDomain { i: u32, j: u32 },
}
