//! Per-index shapes of the coefficients relative to a pair `(s, t)`.
//!
//! Each shape is an identity in the algebra between `u_i`, `v_i`,
//! `s_i ∈ {s, s+1}`, `t_i ∈ {t, t+1}` (the element acting on the
//! appearance of `x` before index `i`) and witnesses `τ`, `μ`. Witnesses are
//! obtained by exact division and the identities are re-checked exactly.

use super::{left_divide, right_divide};
use crate::algebra::Element;
use crate::equation::MonomialEquation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// `p = q`
    Equal,
    /// first index: `p = q s_i`
    LeftQuotient,
    /// first index: `p = μ (s_i + 1)`, `q = μ s_i`
    LeftFactor,
    /// last index: `q = t_i p`
    RightQuotient,
    /// last index: `p = t_i μ`, `q = (t_i + 1) μ`
    RightFactor,
    /// middle index: `p = τ σ`, `q = θ μ` with `σ ∈ {s, s+1}`,
    /// `θ ∈ {t, t+1}` and `t_i μ = τ s_i`
    MiddleFactor,
    /// middle index: `p = t_i μ s_i`, `q = (t_i + 1) μ`
    MixedSandwich,
    /// middle index: `p s_i = t_i q`
    ShiftedProduct,
    /// middle index: `q = t_i p s_i`
    ShiftedSandwich,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexDecomposition {
    /// 1-based coefficient index.
    pub index: usize,
    pub case: CaseTag,
    /// When set, `(p, q) = (v_i, u_i)`; otherwise `(u_i, v_i)`.
    pub swapped: bool,
    pub s_i: Element,
    pub t_i: Element,
    pub sigma: Option<Element>,
    pub theta: Option<Element>,
    pub tau: Option<Element>,
    pub mu: Option<Element>,
}

impl IndexDecomposition {
    fn new(index: usize, case: CaseTag, swapped: bool, s_i: &Element, t_i: &Element) -> Self {
        IndexDecomposition {
            index,
            case,
            swapped,
            s_i: s_i.clone(),
            t_i: t_i.clone(),
            sigma: None,
            theta: None,
            tau: None,
            mu: None,
        }
    }

    /// Re-checks the identities of the tagged case.
    pub fn holds(&self, u_i: &Element, v_i: &Element) -> bool {
        let (p, q) = if self.swapped { (v_i, u_i) } else { (u_i, v_i) };
        let (s, t) = (&self.s_i, &self.t_i);
        let w = |o: &Option<Element>| o.clone().unwrap_or_else(|| Element::zero(p.alphabet()));
        let (tau, mu) = (w(&self.tau), w(&self.mu));
        match self.case {
            CaseTag::Equal => p == q,
            CaseTag::LeftQuotient => *p == q * s,
            CaseTag::LeftFactor => *p == &mu * &s.plus_one() && *q == &mu * s,
            CaseTag::RightQuotient => *q == t * p,
            CaseTag::RightFactor => *p == t * &mu && *q == &t.plus_one() * &mu,
            CaseTag::MiddleFactor => {
                let (sigma, theta) = (w(&self.sigma), w(&self.theta));
                *p == &tau * &sigma && *q == &theta * &mu && t * &mu == &tau * s && !mu.is_zero()
            }
            CaseTag::MixedSandwich => *p == &(t * &mu) * s && *q == &t.plus_one() * &mu,
            CaseTag::ShiftedProduct => &(p * s) == &(t * q),
            CaseTag::ShiftedSandwich => *q == &(t * p) * s,
        }
    }
}

/// Finds a shape for index `index` (1-based) of an `n`-block equation.
pub fn classify_index(
    index: usize,
    n: usize,
    u_i: &Element,
    v_i: &Element,
    s: &Element,
    t: &Element,
) -> Option<IndexDecomposition> {
    let ss = [s.clone(), s.plus_one()];
    let ts = [t.clone(), t.plus_one()];
    if u_i == v_i {
        return Some(IndexDecomposition::new(index, CaseTag::Equal, false, s, t));
    }
    for swapped in [false, true] {
        let (p, q) = if swapped { (v_i, u_i) } else { (u_i, v_i) };
        let found = |case, s_i: &Element, t_i: &Element| {
            IndexDecomposition::new(index, case, swapped, s_i, t_i)
        };
        if index == 1 {
            for s_i in &ss {
                if *p == q * s_i {
                    return Some(found(CaseTag::LeftQuotient, s_i, t));
                }
            }
            let mu = p + q;
            for s_i in &ss {
                let d = IndexDecomposition {
                    mu: Some(mu.clone()),
                    ..found(CaseTag::LeftFactor, s_i, t)
                };
                if d.holds(u_i, v_i) {
                    return Some(d);
                }
            }
        }
        if index == n {
            for t_i in &ts {
                if *q == t_i * p {
                    return Some(found(CaseTag::RightQuotient, s, t_i));
                }
            }
            let mu = p + q;
            for t_i in &ts {
                let d = IndexDecomposition {
                    mu: Some(mu.clone()),
                    ..found(CaseTag::RightFactor, s, t_i)
                };
                if d.holds(u_i, v_i) {
                    return Some(d);
                }
            }
        }
        if index == 1 || index == n {
            continue;
        }
        for sigma in &ss {
            let Some(tau) = right_divide(p, sigma) else {
                continue;
            };
            for theta in &ts {
                let Some(mu) = left_divide(q, theta) else {
                    continue;
                };
                for s_i in &ss {
                    for t_i in &ts {
                        let d = IndexDecomposition {
                            sigma: Some(sigma.clone()),
                            theta: Some(theta.clone()),
                            tau: Some(tau.clone()),
                            mu: Some(mu.clone()),
                            ..found(CaseTag::MiddleFactor, s_i, t_i)
                        };
                        if d.holds(u_i, v_i) {
                            return Some(d);
                        }
                    }
                }
            }
        }
        for t_i in &ts {
            let Some(mu) = left_divide(q, &t_i.plus_one()) else {
                continue;
            };
            for s_i in &ss {
                let d = IndexDecomposition {
                    mu: Some(mu.clone()),
                    ..found(CaseTag::MixedSandwich, s_i, t_i)
                };
                if d.holds(u_i, v_i) {
                    return Some(d);
                }
            }
        }
        for case in [CaseTag::ShiftedProduct, CaseTag::ShiftedSandwich] {
            for s_i in &ss {
                for t_i in &ts {
                    let d = found(case, s_i, t_i);
                    if d.holds(u_i, v_i) {
                        return Some(d);
                    }
                }
            }
        }
    }
    None
}

/// Shapes of all coefficient pairs relative to `(s, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientDecomposition {
    pub s: Element,
    pub t: Element,
    /// One entry per index; `None` when no listed shape applies.
    pub indices: Vec<Option<IndexDecomposition>>,
}

impl CoefficientDecomposition {
    pub fn compute(eq: &MonomialEquation, s: &Element, t: &Element) -> Self {
        let n = eq.n();
        let indices = (0..n)
            .map(|i| classify_index(i + 1, n, &eq.u()[i], &eq.v()[i], s, t))
            .collect();
        CoefficientDecomposition {
            s: s.clone(),
            t: t.clone(),
            indices,
        }
    }

    pub fn all_classified(&self) -> bool {
        self.indices.iter().all(Option::is_some)
    }

    /// Every recorded identity holds exactly for `eq`.
    pub fn verify(&self, eq: &MonomialEquation) -> bool {
        self.indices.len() == eq.n()
            && self
                .indices
                .iter()
                .enumerate()
                .all(|(i, d)| d.as_ref().map_or(true, |d| d.holds(&eq.u()[i], &eq.v()[i])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Element {
        Element::parse(s, 2).unwrap()
    }

    #[test]
    fn factored_three_block() {
        // s = ab, t = ba, μ1 = c, τ2 = bac, μ2 = cab, μ3 = c
        let k = 3;
        let eq = MonomialEquation::parse("cab+c;bacab+bac;bac", "cab;bacab+cab;bac+c", k).unwrap();
        let (s, t) = (
            Element::parse("ab", k).unwrap(),
            Element::parse("ba", k).unwrap(),
        );
        let d = CoefficientDecomposition::compute(&eq, &s, &t);
        assert!(d.all_classified());
        assert!(d.verify(&eq));
        let cases: Vec<CaseTag> = d.indices.iter().map(|d| d.as_ref().unwrap().case).collect();
        assert_eq!(
            cases,
            vec![
                CaseTag::LeftFactor,
                CaseTag::MiddleFactor,
                CaseTag::RightFactor
            ]
        );
        let mid = d.indices[1].as_ref().unwrap();
        assert_eq!(mid.tau, Some(Element::parse("bac", k).unwrap()));
        assert_eq!(mid.mu, Some(Element::parse("cab", k).unwrap()));
    }

    #[test]
    fn equal_middle() {
        let eq = MonomialEquation::parse("bab+b;bab+b;bab", "bab;bab+b;bab+b", 2).unwrap();
        let d = CoefficientDecomposition::compute(&eq, &e("ab"), &e("ba"));
        assert_eq!(d.indices[1].as_ref().unwrap().case, CaseTag::Equal);
        assert!(d.all_classified() && d.verify(&eq));
    }

    #[test]
    fn shifted_two_block() {
        let k = 3;
        let eq = MonomialEquation::parse("cab;c", "c;bac", k).unwrap();
        let (s, t) = (
            Element::parse("ab", k).unwrap(),
            Element::parse("ba", k).unwrap(),
        );
        let d = CoefficientDecomposition::compute(&eq, &s, &t);
        assert_eq!(d.indices[0].as_ref().unwrap().case, CaseTag::LeftQuotient);
        assert_eq!(d.indices[1].as_ref().unwrap().case, CaseTag::RightQuotient);
        assert!(d.verify(&eq));
    }

    #[test]
    fn unrelated_pair_is_unclassified() {
        let eq = MonomialEquation::parse("a;b;a", "b;a;b", 2).unwrap();
        let d = CoefficientDecomposition::compute(&eq, &e("ab"), &e("ba"));
        assert!(!d.all_classified());
    }
}
