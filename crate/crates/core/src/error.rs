use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A requested computation would exceed its step budget.
    #[error("budget exceeded in {task}: needs about {needed} steps, cap is {cap}")]
    BudgetExceeded {
        task: &'static str,
        needed: u128,
        cap: u128,
    },

    /// A permutation of {1..mn} that was supposed to centralize tau does not.
    #[error("permutation does not commute with tau")]
    NotInCentralizer,

    /// An operation that needs a homogeneous input of one degree saw another.
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    /// Malformed textual input (partitions, profiles, CLI arguments).
    #[error("parse error: {0}")]
    Parse(String),

    /// Anything the CLI should report as a usage problem.
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
