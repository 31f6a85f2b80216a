use super::{gate, SolutionFamily, SolverError};
use crate::algebra::Element;
use crate::gf2::{kernel_bounded, LinearXEquation, OracleLimits, Span};
use crate::words::primitive_root;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConjugationStatus {
    Found,
    /// No solution up to the theoretical bound.
    Empty,
    /// No solution up to the configured cap, which is below the bound.
    Truncated,
}

#[derive(Clone, Debug)]
pub struct ConjugationResult {
    /// `{ sum_i w_i p_i(v) }`, absent when no nonzero solution was found.
    pub family: Option<SolutionFamily>,
    /// Residue class of each generator: `floor(deg(w_i) / |r|) mod q`
    /// where the top monomial of `v` is `r^q` with `r` primitive.
    pub classes: Vec<usize>,
    pub period: usize,
    pub search_degree: usize,
    /// `deg(u) · (2^deg(u) + 2)`, saturating.
    pub degree_bound: u128,
    pub truncated: bool,
    pub kernel_dimension: usize,
}

impl ConjugationResult {
    pub fn status(&self) -> ConjugationStatus {
        match (&self.family, self.truncated) {
            (Some(_), _) => ConjugationStatus::Found,
            (None, false) => ConjugationStatus::Empty,
            (None, true) => ConjugationStatus::Truncated,
        }
    }

    pub fn generators(&self) -> &[Element] {
        match &self.family {
            Some(SolutionFamily::Conjugation { generators, .. }) => generators,
            _ => &[],
        }
    }
}

/// `deg(u) · (2^deg(u) + 2)`, saturating.
pub fn conjugation_degree_bound(degree: usize) -> u128 {
    let pow = if degree >= 126 {
        u128::MAX
    } else {
        1u128 << degree
    };
    (degree as u128).saturating_mul(pow.saturating_add(2))
}

/// Solutions of `u x = x v` as a family `{ sum_i w_i p_i(v) }`, searched up
/// to `min(deg(u)·(2^deg(u)+2), degree_cap)`.
pub fn solve_conjugation(
    u: &Element,
    v: &Element,
    degree_cap: usize,
    limits: &OracleLimits,
) -> Result<ConjugationResult, SolverError> {
    gate("u", u, false)?;
    gate("v", v, false)?;
    let (du, dv) = (u.deg().unwrap_or(0), v.deg().unwrap_or(0));
    if du != dv {
        return Err(SolverError::DegreeMismatch {
            left: du,
            right: dv,
        });
    }
    if du == 0 {
        return Err(SolverError::ScalarInput(u.to_string()));
    }
    let k = u.alphabet();
    let degree_bound = conjugation_degree_bound(du);
    let search_degree = degree_bound.min(degree_cap as u128) as usize;
    let truncated = (search_degree as u128) < degree_bound;
    let kernel = kernel_bounded(&LinearXEquation::conjugation(u, v), search_degree, limits)?;
    let kernel_span = kernel.span(k);

    let mut generators: Vec<Element> = Vec::new();
    let mut reached = Span::new(k);
    for b in kernel_span.basis() {
        if reached.contains(&b) {
            continue;
        }
        let mut term = b.clone();
        while term.deg().is_some_and(|d| d <= search_degree) {
            reached.insert(&term);
            term = &term * v;
        }
        generators.push(b);
    }
    if !reached.same_as(&kernel_span) {
        return Err(SolverError::Falsified(format!(
            "the multiples of the generators span {} of the {} kernel dimensions",
            reached.dimension(),
            kernel_span.dimension()
        )));
    }

    let root = primitive_root(v.top_monomial().expect("gated")).expect("nonempty");
    let (rlen, period) = (root.root.len(), root.exponent);
    let classes: Vec<usize> = generators
        .iter()
        .map(|w| (w.deg().unwrap_or(0) / rlen) % period)
        .collect();
    let family = (!generators.is_empty()).then(|| SolutionFamily::Conjugation {
        generators,
        modulus: v.clone(),
    });
    Ok(ConjugationResult {
        family,
        classes,
        period,
        search_degree,
        degree_bound,
        truncated,
        kernel_dimension: kernel_span.dimension(),
    })
}
