use thiserror::Error;

use crate::bounds::RegimeLabel;

/// Errors shared by state construction, bound evaluation, and receiver
/// simulation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A constructed state leaves more probability mass past the Fock cutoff
    /// than the configured tolerance allows. Nothing is renormalized; callers
    /// must retry with a larger dimension.
    #[error(
        "truncation inadequate at dim {dim}: leakage {leakage:.3e} exceeds tolerance \
         {tolerance:.3e} (retry with dim >= {suggested_dim})"
    )]
    TruncationInadequate {
        dim: usize,
        leakage: f64,
        tolerance: f64,
        suggested_dim: usize,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error(
        "support mismatch: outcomes {left_first}..{} vs {right_first}..{}",
        *left_first + *left_len as i64, *right_first + *right_len as i64
    )]
    SupportMismatch {
        left_first: i64,
        left_len: usize,
        right_first: i64,
        right_len: usize,
    },

    /// The matrix handed to [`crate::fock::DensityOperator::new`] violates a
    /// density-operator invariant (Hermiticity, trace window, positivity).
    #[error("invalid density operator: {0}")]
    InvalidState(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The closed-form bound for `system` is stated only inside its good/bad
    /// regime; it refuses to extrapolate elsewhere.
    #[error("{system} closed form not applicable: regime is {label}")]
    RegimeNotApplicable {
        system: &'static str,
        label: RegimeLabel,
    },

    /// The Chernoff objective evaluated to a non-finite value, which signals
    /// a truncation or normalization failure upstream.
    #[error("non-finite Chernoff objective at s = {s}")]
    NonFiniteObjective { s: f64 },

    /// Majority vote is defined here only for an odd number of decisions;
    /// an even count would need a tie-breaking rule.
    #[error("majority vote requires an odd number of shots, got {0}")]
    EvenVoteCount(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
