use super::{
    forward_reduces, gate, left_divide, right_divide, solve_conjugation, ConjugationResult,
    SolutionFamily, SolverError,
};
use crate::algebra::Element;
use crate::equation::MonomialEquation;
use crate::gf2::{kernel_bounded, OracleLimits, Span};

#[derive(Clone, Debug)]
pub struct TwoBlockReduction {
    pub s: Element,
    pub t: Element,
    /// The sides were exchanged so that `deg(u1) > deg(v1)`.
    pub swapped: bool,
    pub threshold: u64,
    /// The family of `s x = x t`.
    pub conjugation: ConjugationResult,
    /// Basis of solutions of degree at most `short_degree` modulo the family.
    pub short_solutions: Vec<Element>,
    pub short_degree: usize,
}

impl TwoBlockReduction {
    pub fn family(&self) -> SolutionFamily {
        SolutionFamily::Reduction {
            s: self.s.clone(),
            t: self.t.clone(),
            threshold: self.threshold,
            short_solutions: self.short_solutions.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub enum TwoBlockOutcome {
    Reduced(TwoBlockReduction),
    /// An exact division failed, so no solution has degree above the
    /// threshold; the short solutions up to `short_degree` are listed.
    NoLongSolutions {
        threshold: u64,
        short_solutions: Vec<Element>,
        short_degree: usize,
    },
}

/// `2 (deg(u1) + deg(v2))^2`, saturating.
pub fn two_block_threshold(du1: usize, dv2: usize) -> u64 {
    let sum = (du1 as u64).saturating_add(dv2 as u64);
    sum.saturating_mul(sum).saturating_mul(2)
}

/// Reduces `u1 x u2 = v1 x v2` with `deg(u1) != deg(v1)` to `s x = x t`
/// where `u1 = v1 s` and `v2 = t u2`.
pub fn reduce_two_block(
    u1: &Element,
    u2: &Element,
    v1: &Element,
    v2: &Element,
    degree_cap: usize,
    limits: &OracleLimits,
) -> Result<TwoBlockOutcome, SolverError> {
    for (name, c) in [("u1", u1), ("u2", u2), ("v1", v1), ("v2", v2)] {
        gate(name, c, true)?;
    }
    let deg = |e: &Element| e.deg().unwrap_or(0);
    if deg(u1) + deg(u2) != deg(v1) + deg(v2) {
        return Err(SolverError::OnlyZeroSolution(
            "the two sides have different degrees",
        ));
    }
    if deg(u1) == deg(v1) {
        return Err(SolverError::EqualDegrees);
    }
    let swapped = deg(u1) < deg(v1);
    let (u1, u2, v1, v2) = if swapped {
        (v1, v2, u1, u2)
    } else {
        (u1, u2, v1, v2)
    };
    let eq = MonomialEquation::two_block(u1, u2, v1, v2)?;
    let threshold = two_block_threshold(deg(u1), deg(v2));
    let short_degree = (degree_cap as u64).min(threshold) as usize;
    let kernel = kernel_bounded(&eq.to_linear().expect("two blocks"), short_degree, limits)?;

    let (Some(s), Some(t)) = (left_divide(u1, v1), right_divide(v2, u2)) else {
        return Ok(TwoBlockOutcome::NoLongSolutions {
            threshold,
            short_solutions: kernel.basis,
            short_degree,
        });
    };
    if !forward_reduces(&eq, &s, &t)? {
        return Err(SolverError::Falsified(format!(
            "quotients s = {s}, t = {t} do not reduce the equation"
        )));
    }
    let conjugation = solve_conjugation(&s, &t, degree_cap, limits)?;
    let family_span = conjugation
        .family
        .as_ref()
        .and_then(|f| f.span_up_to(short_degree))
        .unwrap_or_else(|| Span::new(eq.alphabet()));
    let extra: Vec<Element> = kernel
        .basis
        .iter()
        .map(|b| family_span.reduce(b))
        .filter(|r| !r.is_zero())
        .collect();
    let short_solutions = Span::from_elements(eq.alphabet(), &extra).basis();
    Ok(TwoBlockOutcome::Reduced(TwoBlockReduction {
        s,
        t,
        swapped,
        threshold,
        conjugation,
        short_solutions,
        short_degree,
    }))
}
