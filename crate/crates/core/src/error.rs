use thiserror::Error;

use crate::ladder::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two operands live in different rings (field or term order differ).
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("invalid ladder spec: {}", format_violations(.0))]
    InvalidSpec(Vec<Violation>),

    #[error("ladder spec is not normalized: {0}")]
    NotNormalized(String),

    /// Every size is 1; there is no biliaison step left to take.
    #[error("ladder is already linear (all sizes are 1)")]
    AlreadyLinear,

    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An internal invariant failed. Always a bug or a failed theorem check.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
