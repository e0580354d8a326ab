use thiserror::Error;

/// Errors raised by set construction, the sumset engine, the bound formulas
/// and the theorem checkers.
///
/// Every variant is a precondition or usage failure. A theorem whose
/// conclusion fails on a valid input is reported through the returned
/// report value, never through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty set")]
    EmptySet,

    #[error("degenerate dilation: factor must be nonzero")]
    DegenerateDilation,

    #[error("classification undefined: need at least 2 elements, got {0}")]
    ClassificationUndefined(usize),

    #[error("gaps undefined: need at least 2 elements, got {0}")]
    GapsUndefined(usize),

    #[error("h must be positive")]
    NonPositiveFold,

    #[error("h exceeds |A| (h = {h}, |A| = {k})")]
    FoldExceedsSize { h: usize, k: usize },

    #[error("range overflow: sum range exceeds the supported limit")]
    RangeOverflow,

    #[error("instance too large for oracle ({vectors} coefficient vectors, limit {limit})")]
    OracleTooLarge { vectors: u128, limit: u128 },

    #[error("parameters outside the validity window of {bound}: {window} (h = {h}, k = {k})")]
    OutOfWindow {
        bound: &'static str,
        window: &'static str,
        h: usize,
        k: usize,
    },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("search space too large: {size} candidate sets exceeds budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },

    #[error("invalid search space: {0}")]
    InvalidSpace(String),

    #[error("trials must be at least 1")]
    NoTrials,

    #[error("unknown target '{0}'")]
    UnknownTarget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
