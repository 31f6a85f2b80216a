//! GF(2) linear algebra and bounded-degree oracles.

pub mod dense;
mod exhaustive;
mod linear;
mod span;

pub use exhaustive::{exhaustive_solutions, exhaustive_solutions_naive};
pub use linear::{
    kernel_bounded, monomial_basis, monomial_count, solve_affine, AffineSolution, KernelBasis,
    LinearXEquation,
};
pub use span::{linear_dependencies, Span};

/// Explicit resource caps for the oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct OracleLimits {
    /// Maximum number of unknowns in one graded layer (and of explicit monomial lists).
    pub column_cap: usize,
    /// Maximum number of candidate elements for exhaustive enumeration.
    pub candidate_cap: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            column_cap: 4_000_000,
            candidate_cap: 1 << 16,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinearError {
    #[error("{cap} exceeded: need {required}, limit {limit}")]
    ResourceCap {
        cap: &'static str,
        required: u128,
        limit: u128,
    },
    #[error("kernel_bounded needs a zero right-hand side; use solve_affine")]
    NonHomogeneous,
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}
