use alloc::string::String;

use thiserror::Error;

/// Errors raised by the shape algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank n = {0} (expected 2 <= n <= 31)")]
    InvalidRank(usize),
    #[error("invalid index set {indices:?} for n = {n}: {reason}")]
    InvalidIndexSet { n: usize, indices: alloc::vec::Vec<usize>, reason: &'static str },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid Plücker data: {0}")]
    InvalidPlucker(String),
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("tableau is already standard for this ring")]
    AlreadyStandard,
    #[error("generator {0} is not admissible here")]
    InadmissibleGenerator(String),
    #[error("monomial {0} is not in the module basis")]
    BasisClosure(String),
    #[error("vanishing principal minor of order {0}")]
    SingularMinor(usize),
    #[error("matrix is not in SL(n): {0}")]
    NotSpecialLinear(String),
    #[error("invalid diamond index: {0}")]
    InvalidIndex(String),
    #[error("iteration limit reached: {0}")]
    IterationLimit(String),
    #[error("{0}")]
    Mismatch(String),
}

pub type Result<T> = core::result::Result<T, Error>;
