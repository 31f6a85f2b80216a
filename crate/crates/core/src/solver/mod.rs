//! Structure results for one-variable equations turned into procedures:
//! centralizers, conjugation families, exact division and the reductions of
//! general equations to `s x = x t`.

mod centralizer;
mod conjugation;
mod decomposition;
mod division;
mod family;
mod forward;
mod general;
mod two_block;
mod verify;

pub use centralizer::{centralizer, CentralizerResult};
pub use conjugation::{
    conjugation_degree_bound, solve_conjugation, ConjugationResult, ConjugationStatus,
};
pub use decomposition::{classify_index, CaseTag, CoefficientDecomposition, IndexDecomposition};
pub use division::{left_divide, right_divide};
pub use family::{FamilyParseError, SolutionFamily};
pub use forward::{forward_reduces, forward_residue};
pub use general::{
    general_threshold, reduce_general, GeneralReduction, PeriodicityCheck, ReductionRoute,
};
pub use two_block::{reduce_two_block, two_block_threshold, TwoBlockOutcome, TwoBlockReduction};
pub use verify::{verify_family, CheckOutcome, CheckStatus, VerifyOptions, VerifyReport};

use crate::algebra::{AlgebraError, Element};
use crate::equation::EquationError;
use crate::gf2::LinearError;
use crate::words;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolverError {
    #[error("{name} = {value}: {reason}")]
    Gate {
        name: String,
        value: String,
        reason: &'static str,
    },
    #[error("{0} is a constant; every element commutes with it")]
    ScalarInput(String),
    #[error("degrees differ: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("deg(u1) = deg(v1); the equal-degree case is handled by reduce_general")]
    EqualDegrees,
    #[error("degree bound {bound} is below deg(u) = {degree}")]
    BoundTooSmall { bound: usize, degree: usize },
    #[error("every coefficient pair is equal; every x is a solution")]
    AllCoefficientsEqual,
    #[error("only x = 0 solves the equation: {0}")]
    OnlyZeroSolution(&'static str),
    #[error("the hint is not a nonzero solution of the equation")]
    HintNotSolution,
    #[error("no pair (s, t) passing the symbolic check was found")]
    NoReduction,
    #[error("validation failed: {0}")]
    Falsified(String),
    #[error(transparent)]
    Oracle(#[from] LinearError),
    #[error(transparent)]
    Equation(#[from] EquationError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl SolverError {
    /// True for refusals caused by a configured resource cap.
    pub fn is_cap(&self) -> bool {
        matches!(self, SolverError::Oracle(LinearError::ResourceCap { .. }))
    }
}

/// Checks that the top homogeneous part of `e` is a single monomial, and
/// additionally that it is square-free when `square_free` is set.
pub(crate) fn gate(name: &str, e: &Element, square_free: bool) -> Result<(), SolverError> {
    let fail = |reason| SolverError::Gate {
        name: name.to_string(),
        value: e.to_string(),
        reason,
    };
    let top = e.top_monomial().ok_or_else(|| {
        fail(if e.is_zero() {
            "zero coefficient"
        } else {
            "top homogeneous part is not a monomial"
        })
    })?;
    if square_free && !words::is_square_free(top) {
        return Err(fail("top monomial contains a square"));
    }
    Ok(())
}

/// `2^e` as `u64`, saturating.
pub(crate) fn pow2_saturating(e: usize) -> u64 {
    if e >= 64 {
        u64::MAX
    } else {
        1u64 << e
    }
}
