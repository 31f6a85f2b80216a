//! Reduction of `u_1 x u_2 ... x u_n = v_1 x v_2 ... x v_n` to `s x = x t`.
//!
//! Candidate pairs come from exact divisions at the outer coefficients,
//! from the bilinear system `s x_1 = x_1 t` when a solution `x_1` is known,
//! and from the pieces obtained by splitting at equal unshifted
//! coefficients. A candidate is accepted only when the symbolic forward
//! check cancels, so every solution of `s x = x t` provably solves the
//! equation whatever route produced it.

use super::decomposition::CoefficientDecomposition;
use super::{
    forward_reduces, gate, left_divide, pow2_saturating, right_divide, solve_conjugation,
    ConjugationResult, SolutionFamily, SolverError,
};
use crate::algebra::{Element, Word};
use crate::equation::MonomialEquation;
use crate::gf2::{
    exhaustive_solutions, kernel_bounded, linear_dependencies, monomial_basis, monomial_count,
    OracleLimits, Span,
};
use crate::words::{self, ShiftProfile};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionRoute {
    /// Divisions at the first and last coefficient.
    Boundary,
    /// Kernel of `s x_1 + x_1 t = 0` for the supplied solution.
    Hint,
    /// Boundary divisions of a piece left of or right of index `at`.
    Split { at: usize },
}

/// Whether the squares of the substituted top monomials are explained by
/// the period of the solution's top monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PeriodicityCheck {
    Holds {
        witness: Element,
    },
    /// A square at `start` with half length `half` on the given side is
    /// neither inside an occurrence of `x_0` nor a multiple of its period.
    Violated {
        witness: Element,
        side: char,
        start: usize,
        half: usize,
    },
    Unverifiable,
}

#[derive(Clone, Debug)]
pub struct GeneralReduction {
    pub s: Element,
    pub t: Element,
    pub route: ReductionRoute,
    /// Equal coefficient pairs cancelled at the front and back.
    pub stripped: (usize, usize),
    /// Indices `i` (1-based) with `u_i = v_i` between unshifted appearances.
    pub split_points: Vec<usize>,
    pub shift_profile: ShiftProfile,
    pub decomposition: CoefficientDecomposition,
    pub threshold: u64,
    /// Canonical pairs found from the hint, when one was given.
    pub hint_pairs: Vec<(Element, Element)>,
    pub hint_agrees: Option<bool>,
    pub periodicity: PeriodicityCheck,
    /// Coefficients not exceeding the minimal shift.
    pub scope_notes: Vec<String>,
    /// Family of `s x = x t`, when its coefficients pass the gate.
    pub conjugation: Option<ConjugationResult>,
    /// Solutions of degree at most `short_degree` outside the family.
    pub short_solutions: Vec<Element>,
    pub short_degree: usize,
}

impl GeneralReduction {
    pub fn family(&self) -> SolutionFamily {
        SolutionFamily::Reduction {
            s: self.s.clone(),
            t: self.t.clone(),
            threshold: self.threshold,
            short_solutions: self.short_solutions.clone(),
        }
    }
}

/// `2 (2 + 2^(deg(s)+2)) + 2 (sum deg u_i)^2`, saturating.
pub fn general_threshold(deg_s: usize, coefficient_degree_sum: usize) -> u64 {
    let a = pow2_saturating(deg_s.saturating_add(2))
        .saturating_add(2)
        .saturating_mul(2);
    let sum = coefficient_degree_sum as u64;
    a.saturating_add(sum.saturating_mul(sum).saturating_mul(2))
}

/// Picks the representative of `{(s, t), (s+1, t+1)}` with the smaller `s`.
fn canonical(s: &Element, t: &Element) -> (Element, Element) {
    let (s1, t1) = (s.plus_one(), t.plus_one());
    if s1 < *s {
        (s1, t1)
    } else {
        (s.clone(), t.clone())
    }
}

/// Cancels equal pairs at the ends (valid for `x != 0` since the algebra
/// has no zero divisors).
fn strip(eq: &MonomialEquation) -> (Vec<Element>, Vec<Element>, usize, usize) {
    let (mut u, mut v) = (eq.u().to_vec(), eq.v().to_vec());
    let mut front = 0;
    while u.len() >= 2 && u[0] == v[0] {
        u.remove(0);
        v.remove(0);
        front += 1;
    }
    let mut back = 0;
    while u.len() >= 2 && u[u.len() - 1] == v[v.len() - 1] {
        u.pop();
        v.pop();
        back += 1;
    }
    (u, v, front, back)
}

/// Candidate pairs from divisions at the outer coefficients of `(u, v)`.
fn boundary_candidates(u: &[Element], v: &[Element]) -> Vec<(Element, Element)> {
    let n = u.len();
    if n < 2 || u[0] == v[0] || u[n - 1] == v[n - 1] {
        return Vec::new();
    }
    let deg = |e: &Element| e.deg().unwrap_or(0);
    let (u1, v1, un, vn) = (&u[0], &v[0], &u[n - 1], &v[n - 1]);
    let s = match deg(u1).cmp(&deg(v1)) {
        std::cmp::Ordering::Greater => left_divide(u1, v1),
        std::cmp::Ordering::Less => left_divide(v1, u1),
        std::cmp::Ordering::Equal => left_divide(v1, &(u1 + v1)),
    };
    let t = match deg(vn).cmp(&deg(un)) {
        std::cmp::Ordering::Greater => right_divide(vn, un),
        std::cmp::Ordering::Less => right_divide(un, vn),
        std::cmp::Ordering::Equal => right_divide(un, &(un + vn)),
    };
    match (s, t) {
        (Some(s), Some(t)) if deg(&s) == deg(&t) && deg(&s) > 0 => {
            vec![(s.clone(), t.clone()), (s, t.plus_one())]
        }
        _ => Vec::new(),
    }
}

/// Pairs `(s, t)` with `deg(s) = deg(t) = d` and `s x_1 = x_1 t`, for the
/// least `d` where one passes the forward check on `eq`.
fn hint_candidates(
    eq: &MonomialEquation,
    x1: &Element,
    max_degree: usize,
    limits: &OracleLimits,
) -> Result<Vec<(Element, Element)>, SolverError> {
    const MAX_KERNEL_DIMENSION: usize = 12;
    let k = eq.alphabet();
    let one = Word::one();
    for d in 1..=max_degree {
        let words = monomial_basis(k, d, limits)?;
        let mut columns: Vec<Element> = words.iter().map(|w| x1.sandwich(w, &one)).collect();
        columns.extend(words.iter().map(|w| x1.sandwich(&one, w)));
        let deps = linear_dependencies(&columns);
        if deps.len() > MAX_KERNEL_DIMENSION {
            continue;
        }
        let m = words.len();
        let pairs: Vec<(Element, Element)> = deps
            .iter()
            .map(|dep| {
                let pick = |range: std::ops::Range<usize>, off: usize| {
                    Element::from_unsorted(
                        range
                            .filter(|&i| dep.get(i + off))
                            .map(|i| words[i].clone())
                            .collect(),
                        k,
                    )
                };
                (pick(0..m, 0), pick(0..m, m))
            })
            .collect();
        let mut found: Vec<(Element, Element)> = Vec::new();
        for mask in 1u32..(1 << pairs.len()) {
            let mut s = Element::zero(k);
            let mut t = Element::zero(k);
            for (j, (ps, pt)) in pairs.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    s += ps;
                    t += pt;
                }
            }
            if s.deg() != Some(d) || t.deg() != Some(d) {
                continue;
            }
            let c = canonical(&s, &t);
            if !found.contains(&c) && forward_reduces(eq, &c.0, &c.1)? {
                found.push(c);
            }
        }
        if !found.is_empty() {
            found.sort();
            return Ok(found);
        }
    }
    Ok(Vec::new())
}

/// Top monomial of one side after substituting a solution with top `x0`,
/// with the start positions of the occurrences of `x0`.
fn substituted_top(coeffs: &[Element], x0: &Word) -> (Word, Vec<usize>) {
    let mut w = coeffs[0]
        .leading_monomial()
        .cloned()
        .unwrap_or_else(Word::one);
    let mut starts = Vec::new();
    for c in &coeffs[1..] {
        starts.push(w.len());
        w = w.concat(x0);
        w = w.concat(c.leading_monomial().unwrap_or(&Word::one()));
    }
    (w, starts)
}

fn check_periodicity(eq: &MonomialEquation, x: &Element) -> PeriodicityCheck {
    let Some(x0) = x.leading_monomial() else {
        return PeriodicityCheck::Unverifiable;
    };
    let period = words::smallest_period(x0).max(1);
    for (side, coeffs) in [('u', eq.u()), ('v', eq.v())] {
        let (top, starts) = substituted_top(coeffs, x0);
        for (start, half) in words::squares(&top) {
            let inside = starts
                .iter()
                .any(|&p| p <= start && start + 2 * half <= p + x0.len());
            if !inside && half % period != 0 {
                return PeriodicityCheck::Violated {
                    witness: x.clone(),
                    side,
                    start,
                    half,
                };
            }
        }
    }
    PeriodicityCheck::Holds { witness: x.clone() }
}

/// Largest `D <= cap` for which exhaustive enumeration fits `limits`.
fn exhaustive_reach(k: usize, cap: usize, limits: &OracleLimits) -> Option<usize> {
    (0..=cap)
        .take_while(|&d| {
            let n = monomial_count(k, d);
            n < 64 && (1u128 << n) <= limits.candidate_cap as u128
        })
        .last()
}

/// Reduces `eq` to `s x = x t`; see the module documentation.
pub fn reduce_general(
    eq: &MonomialEquation,
    hint: Option<&Element>,
    degree_cap: usize,
    limits: &OracleLimits,
) -> Result<GeneralReduction, SolverError> {
    for i in 0..eq.n() {
        gate(&format!("u{}", i + 1), &eq.u()[i], true)?;
        gate(&format!("v{}", i + 1), &eq.v()[i], true)?;
    }
    if eq.u() == eq.v() {
        return Err(SolverError::AllCoefficientsEqual);
    }
    let du: usize = eq.u_degrees().iter().sum();
    let dv: usize = eq.v_degrees().iter().sum();
    if du != dv {
        return Err(SolverError::OnlyZeroSolution(
            "the two sides have different degrees",
        ));
    }
    if let Some(x1) = hint {
        if x1.is_zero() || !eq.is_solution(x1) {
            return Err(SolverError::HintNotSolution);
        }
    }
    let (u, v, front, back) = strip(eq);
    if u.len() == 1 {
        return Err(SolverError::OnlyZeroSolution(
            "cancelling equal outer coefficients leaves two different constants",
        ));
    }
    let k = eq.alphabet();
    let shift_profile = eq.shift_profile(0).expect("balanced");

    let split_points: Vec<usize> = (1..u.len() - 1)
        .filter(|&i| u[i] == v[i])
        .map(|i| i + front + 1)
        .filter(|&idx| {
            let off = &shift_profile.offsets;
            off[idx - 2] == 0 && off[idx - 1] == 0
        })
        .collect();

    let mut chosen: Option<((Element, Element), ReductionRoute)> = None;
    for (s, t) in boundary_candidates(&u, &v) {
        if forward_reduces(eq, &s, &t)? {
            chosen = Some((canonical(&s, &t), ReductionRoute::Boundary));
            break;
        }
    }
    let max_coeff_degree = eq
        .u_degrees()
        .into_iter()
        .chain(eq.v_degrees())
        .max()
        .unwrap_or(0);
    let hint_pairs = match hint {
        Some(x1) => hint_candidates(eq, x1, max_coeff_degree.max(1), limits)?,
        None => Vec::new(),
    };
    if chosen.is_none() {
        if let Some(p) = hint_pairs.first() {
            chosen = Some((p.clone(), ReductionRoute::Hint));
        }
    }
    if chosen.is_none() {
        'split: for &at in &split_points {
            let i = at - 1;
            let one = Element::one(k);
            let mut left = (eq.u()[..i].to_vec(), eq.v()[..i].to_vec());
            left.0.push(one.clone());
            left.1.push(one.clone());
            let mut right = (vec![one.clone()], vec![one]);
            right.0.extend_from_slice(&eq.u()[i + 1..]);
            right.1.extend_from_slice(&eq.v()[i + 1..]);
            for (pu, pv) in [left, right] {
                let Ok(piece) = MonomialEquation::with_min_len(pu, pv, 1) else {
                    continue;
                };
                let (su, sv, _, _) = strip(&piece);
                for (s, t) in boundary_candidates(&su, &sv) {
                    if forward_reduces(eq, &s, &t)? {
                        chosen = Some((canonical(&s, &t), ReductionRoute::Split { at }));
                        break 'split;
                    }
                }
            }
        }
    }
    let Some(((s, t), route)) = chosen else {
        return Err(SolverError::NoReduction);
    };

    let hint_agrees =
        hint.map(|x1| &s * x1 == x1 * &t && hint_pairs.contains(&(s.clone(), t.clone())));
    let decomposition = CoefficientDecomposition::compute(eq, &s, &t);
    if !decomposition.verify(eq) {
        return Err(SolverError::Falsified(
            "a recorded coefficient identity does not hold".into(),
        ));
    }
    let deg_s = s.deg().unwrap_or(0);
    let threshold = general_threshold(deg_s, du);

    let mut scope_notes = Vec::new();
    if let Some(d) = shift_profile.min_shift {
        for (side, degs) in [('u', eq.u_degrees()), ('v', eq.v_degrees())] {
            for (i, dg) in degs.iter().enumerate() {
                if *dg <= d {
                    scope_notes.push(format!("deg({side}{}) = {dg} <= d = {d}", i + 1));
                }
            }
        }
    }

    let conjugation = match solve_conjugation(&s, &t, degree_cap, limits) {
        Ok(c) => Some(c),
        Err(e) if e.is_cap() => return Err(e),
        Err(_) => None,
    };
    let family_span = conjugation.as_ref().and_then(|c| c.family.as_ref());

    let periodicity = match (hint, family_span) {
        (Some(x1), _) => check_periodicity(eq, x1),
        (
            None,
            Some(SolutionFamily::Conjugation {
                generators,
                modulus,
            }),
        ) => {
            let w = &generators[0];
            let dw = w.deg().unwrap_or(0);
            let dm = modulus.deg().unwrap_or(1).max(1);
            let j = (du + 2 * dm).saturating_sub(dw) / dm + 1;
            check_periodicity(eq, &(w * &modulus.power(j)))
        }
        _ => PeriodicityCheck::Unverifiable,
    };

    let short_cap = (degree_cap as u64).min(threshold) as usize;
    let (short_solutions, short_degree) = if eq.n() == 2 {
        let kernel = kernel_bounded(&eq.to_linear().expect("two blocks"), short_cap, limits)?;
        let fam = family_span
            .and_then(|f| f.span_up_to(short_cap))
            .unwrap_or_else(|| Span::new(k));
        let extra: Vec<Element> = kernel
            .basis
            .iter()
            .map(|b| fam.reduce(b))
            .filter(|r| !r.is_zero())
            .collect();
        (Span::from_elements(k, &extra).basis(), short_cap)
    } else {
        match exhaustive_reach(k, short_cap, limits) {
            Some(d) => {
                let sols = exhaustive_solutions(eq, d, limits)?;
                let extra = sols.into_iter().filter(|x| &s * x != x * &t).collect();
                (extra, d)
            }
            None => (Vec::new(), 0),
        }
    };

    Ok(GeneralReduction {
        s,
        t,
        route,
        stripped: (front, back),
        split_points,
        shift_profile,
        decomposition,
        threshold,
        hint_pairs,
        hint_agrees,
        periodicity,
        scope_notes,
        conjugation,
        short_solutions,
        short_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Element {
        Element::parse(s, 2).unwrap()
    }

    fn lim() -> OracleLimits {
        OracleLimits::default()
    }

    #[test]
    fn factored_three_block_is_recovered() {
        let eq = MonomialEquation::parse("bab+b;bab+b;bab", "bab;bab+b;bab+b", 2).unwrap();
        let r = reduce_general(&eq, None, 3, &lim()).unwrap();
        assert_eq!((r.s.clone(), r.t.clone()), (e("ab"), e("ba")));
        assert_eq!(r.route, ReductionRoute::Boundary);
        assert!(r.decomposition.all_classified());
        assert_eq!(r.threshold, 2 * (2 + 16) + 2 * 81);
        assert_eq!(r.conjugation.unwrap().generators(), &[e("a")]);
    }

    #[test]
    fn hint_route_agrees() {
        let eq = MonomialEquation::parse("bab+b;bab+b;bab", "bab;bab+b;bab+b", 2).unwrap();
        let x1 = e("ababa + a");
        let r = reduce_general(&eq, Some(&x1), 3, &lim()).unwrap();
        assert_eq!(r.hint_agrees, Some(true));
        assert_eq!(r.hint_pairs, vec![(e("ab"), e("ba"))]);
        assert!(matches!(r.periodicity, PeriodicityCheck::Holds { .. }));
        assert!(matches!(
            reduce_general(&eq, Some(&e("b")), 3, &lim()),
            Err(SolverError::HintNotSolution)
        ));
    }

    #[test]
    fn two_block_matches_dedicated_route() {
        let k = 3;
        let eq = MonomialEquation::parse("cab;c", "c;bac", k).unwrap();
        let r = reduce_general(&eq, None, 5, &lim()).unwrap();
        assert_eq!(r.s, Element::parse("ab", k).unwrap());
        assert_eq!(r.t, Element::parse("ba", k).unwrap());
        assert!(r.short_solutions.is_empty());
        assert_eq!(r.shift_profile.min_shift, Some(2));
        assert!(!r.scope_notes.is_empty());
    }

    #[test]
    fn equal_degree_two_block() {
        // μ1 x u2 = v1 x μ2 after cancelling tops, with u1 = v1 + μ1, v2 = u2 + μ2
        let k = 3;
        let (v1, mu1, u2, mu2) = (
            Element::parse("cab", k).unwrap(),
            Element::parse("c", k).unwrap(),
            Element::parse("bac", k).unwrap(),
            Element::parse("c", k).unwrap(),
        );
        let eq = MonomialEquation::new(vec![&v1 + &mu1, u2.clone()], vec![v1, &u2 + &mu2]).unwrap();
        let r = reduce_general(&eq, None, 4, &lim()).unwrap();
        assert!(forward_reduces(&eq, &r.s, &r.t).unwrap());
        assert_eq!(r.s.deg(), Some(2));
    }

    #[test]
    fn rejections() {
        let eq = MonomialEquation::parse("ab;a", "ab;a", 2).unwrap();
        assert!(matches!(
            reduce_general(&eq, None, 3, &lim()),
            Err(SolverError::AllCoefficientsEqual)
        ));
        let eq = MonomialEquation::parse("ab;a", "ab;b", 2).unwrap();
        assert!(matches!(
            reduce_general(&eq, None, 3, &lim()),
            Err(SolverError::OnlyZeroSolution(_))
        ));
        let eq = MonomialEquation::parse("aa;a", "a;aa", 2).unwrap();
        assert!(matches!(
            reduce_general(&eq, None, 3, &lim()),
            Err(SolverError::Gate { .. })
        ));
    }

    #[test]
    fn thresholds_saturate() {
        assert_eq!(general_threshold(1, 0), 2 * (2 + 8));
        assert_eq!(general_threshold(200, 3), u64::MAX);
    }
}
