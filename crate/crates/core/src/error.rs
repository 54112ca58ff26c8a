use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty word has no Lyndon status")]
    EmptyWord,
    #[error("empty pattern")]
    EmptyPattern,
    #[error("empty input")]
    EmptyInput,
    #[error("span {start}..{end} out of range for text of length {len}")]
    SpanOutOfRange { start: usize, end: usize, len: usize },
    #[error("order exceeds factorization: run {run} with order {order} needs {needed} runs, have {m}")]
    OrderExceedsFactorization {
        run: usize,
        order: usize,
        needed: usize,
        m: usize,
    },
    #[error("leftmost occurrence of runs {run}..{last} at position {position} does not start a Lyndon run")]
    UnanchoredOccurrence { run: usize, last: usize, position: usize },
    #[error("input of length {len} exceeds oracle bound {bound}")]
    InputTooLong { len: usize, bound: usize },
    #[error("uniqueness violated: found {found} Lyndon factorizations")]
    UniquenessViolated { found: usize },
    #[error("decomposition undefined for empty domain")]
    EmptyDomain,
    #[error("budget inconsistency: {0}")]
    BudgetInconsistency(String),
    #[error("formula domain: k = {0} but the closed forms need k >= 2")]
    FormulaDomain(usize),
    #[error("infeasible budget: {count} strings exceeds cap {cap}")]
    InfeasibleBudget { count: u128, cap: u128 },
    #[error("decomposition invariant: {0}")]
    DecompositionInvariant(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
