//! Membership, completeness and threshold checks of a family against an
//! equation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{forward_reduces, solve_conjugation, SolutionFamily, SolverError};
use crate::algebra::Element;
use crate::equation::MonomialEquation;
use crate::gf2::{
    exhaustive_solutions, kernel_bounded, LinearError, LinearXEquation, OracleLimits, Span,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Nothing to check at the requested degree.
    Vacuous,
    /// The oracle could not run within the configured caps.
    Skipped,
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
    pub witness: Option<Element>,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub degree: usize,
    pub samples: usize,
    pub seed: u64,
    pub limits: OracleLimits,
}

impl VerifyOptions {
    pub fn new(degree: usize) -> Self {
        VerifyOptions {
            degree,
            samples: 8,
            seed: 0,
            limits: OracleLimits::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub degree: usize,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.status == CheckStatus::Fail)
    }
}

fn outcome(name: &'static str, status: CheckStatus, detail: String) -> CheckOutcome {
    CheckOutcome {
        name,
        status,
        detail,
        witness: None,
    }
}

fn failure(name: &'static str, detail: String, witness: Element) -> CheckOutcome {
    CheckOutcome {
        name,
        status: CheckStatus::Fail,
        detail,
        witness: Some(witness),
    }
}

/// Random polynomial of exact degree `degree`.
fn random_poly(rng: &mut ChaCha8Rng, degree: usize) -> Vec<bool> {
    let mut c: Vec<bool> = (0..=degree).map(|_| rng.gen()).collect();
    c[degree] = true;
    c
}

/// Random members `sum_i w_i p_i(v)` of degree above `degree`.
fn family_samples(
    generators: &[Element],
    modulus: &Element,
    degree: usize,
    count: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Element> {
    let dv = modulus.deg().unwrap_or(0).max(1);
    let mut out = Vec::new();
    for _ in 0..count {
        let mut x = Element::zero(modulus.alphabet());
        for (i, w) in generators.iter().enumerate() {
            if i > 0 && rng.gen_bool(0.5) {
                continue;
            }
            let dw = w.deg().unwrap_or(0);
            let j = degree.saturating_sub(dw) / dv + 1 + rng.gen_range(0..3);
            x += &(w * &Element::poly_eval(&random_poly(rng, j), modulus));
        }
        if !x.is_zero() {
            out.push(x);
        }
    }
    out
}

/// Oracle solutions of degree at most `degree`: a kernel basis for two
/// blocks, the full solution set otherwise.
fn oracle_solutions(
    eq: &MonomialEquation,
    degree: usize,
    limits: &OracleLimits,
) -> Result<Option<Vec<Element>>, SolverError> {
    let result = match eq.to_linear() {
        Some(lin) => kernel_bounded(&lin, degree, limits).map(|k| k.basis),
        None => exhaustive_solutions(eq, degree, limits),
    };
    match result {
        Ok(v) => Ok(Some(v)),
        Err(LinearError::ResourceCap { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

pub fn verify_family(
    eq: &MonomialEquation,
    family: &SolutionFamily,
    opts: &VerifyOptions,
) -> Result<VerifyReport, SolverError> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let d = opts.degree;
    let oracle = oracle_solutions(eq, d, &opts.limits)?;
    let checks = match family {
        SolutionFamily::Conjugation {
            generators,
            modulus,
        } => {
            let membership = (|| {
                for w in generators {
                    if !eq.is_solution(w) {
                        return failure(
                            "membership",
                            format!("generator {w} is not a solution"),
                            w.clone(),
                        );
                    }
                }
                let samples = family_samples(generators, modulus, d, opts.samples, &mut rng);
                let top = samples.iter().filter_map(Element::deg).max().unwrap_or(0);
                for x in &samples {
                    if !eq.is_solution(x) {
                        return failure(
                            "membership",
                            "family member is not a solution".into(),
                            x.clone(),
                        );
                    }
                }
                outcome(
                    "membership",
                    CheckStatus::Pass,
                    format!(
                        "{} generators and {} samples up to degree {top} solve the equation",
                        generators.len(),
                        samples.len()
                    ),
                )
            })();
            let completeness = match &oracle {
                None => outcome(
                    "completeness",
                    CheckStatus::Skipped,
                    format!("oracle exceeds caps at degree {d}"),
                ),
                Some(sols) => {
                    let span = family.span_up_to(d).expect("conjugation family");
                    match sols.iter().find(|x| !span.contains(x)) {
                        Some(x) => failure(
                            "completeness",
                            format!(
                                "oracle solution of degree {} is outside the family",
                                x.degree()
                            ),
                            x.clone(),
                        ),
                        None => outcome(
                            "completeness",
                            CheckStatus::Pass,
                            format!(
                                "{} oracle solutions up to degree {d} lie in the family",
                                sols.len()
                            ),
                        ),
                    }
                }
            };
            let threshold = outcome(
                "threshold",
                CheckStatus::Vacuous,
                "conjugation families carry no threshold".into(),
            );
            vec![membership, completeness, threshold]
        }
        SolutionFamily::Reduction {
            s,
            t,
            threshold,
            short_solutions,
        } => {
            let st = LinearXEquation::conjugation(s, t);
            let membership = (|| -> Result<CheckOutcome, SolverError> {
                for x in short_solutions {
                    if !eq.is_solution(x) {
                        return Ok(failure(
                            "membership",
                            format!("listed short solution {x} fails"),
                            x.clone(),
                        ));
                    }
                }
                let ds = s.deg().unwrap_or(0);
                let reach = d.max(2 * ds + 2);
                let mut sampled = 0;
                if let Ok(conj) = solve_conjugation(s, t, reach, &opts.limits) {
                    if let Some(SolutionFamily::Conjugation {
                        generators,
                        modulus,
                    }) = &conj.family
                    {
                        for w in generators {
                            if !eq.is_solution(w) {
                                return Ok(failure(
                                    "membership",
                                    format!("solution {w} of s x = x t fails the equation"),
                                    w.clone(),
                                ));
                            }
                        }
                        for x in family_samples(generators, modulus, d, opts.samples, &mut rng) {
                            sampled += 1;
                            if !eq.is_solution(&x) {
                                return Ok(failure(
                                    "membership",
                                    "solution of s x = x t fails the equation".into(),
                                    x,
                                ));
                            }
                        }
                    }
                }
                let symbolic = ds > 0 && forward_reduces(eq, s, t)?;
                Ok(if symbolic {
                    outcome(
                        "membership",
                        CheckStatus::Pass,
                        format!("symbolic reduction cancels; {sampled} samples solve the equation"),
                    )
                } else {
                    outcome(
                        "membership",
                        CheckStatus::Fail,
                        "symbolic reduction of the equation modulo s x = x t does not cancel"
                            .into(),
                    )
                })
            })()?;
            let (completeness, threshold_check) = match &oracle {
                None => (
                    outcome(
                        "completeness",
                        CheckStatus::Skipped,
                        format!("oracle exceeds caps at degree {d}"),
                    ),
                    outcome(
                        "threshold",
                        CheckStatus::Skipped,
                        format!("oracle exceeds caps at degree {d}"),
                    ),
                ),
                Some(sols) => {
                    let solves_st = |x: &Element| st.is_solution(x);
                    let completeness = if eq.n() == 2 {
                        let mut span = kernel_bounded(&st, d, &opts.limits)
                            .map(|k| k.span(eq.alphabet()))
                            .unwrap_or_else(|_| Span::new(eq.alphabet()));
                        for x in short_solutions {
                            span.insert(x);
                        }
                        sols.iter().find(|x| !span.contains(x)).cloned()
                    } else {
                        sols.iter()
                            .find(|x| !solves_st(x) && !short_solutions.contains(x))
                            .cloned()
                    };
                    let completeness = match completeness {
                        Some(x) => failure(
                            "completeness",
                            "oracle solution is neither in the family nor listed as short".into(),
                            x,
                        ),
                        None => outcome(
                            "completeness",
                            CheckStatus::Pass,
                            format!(
                                "{} oracle solutions up to degree {d} are accounted for",
                                sols.len()
                            ),
                        ),
                    };
                    let threshold_check = if (d as u64) <= *threshold {
                        outcome(
                            "threshold",
                            CheckStatus::Vacuous,
                            format!("degree {d} does not exceed the threshold {threshold}"),
                        )
                    } else {
                        let long = sols
                            .iter()
                            .filter(|x| x.deg().is_some_and(|dx| dx as u64 > *threshold));
                        match long.clone().find(|x| !solves_st(x)) {
                            Some(x) => failure(
                                "threshold",
                                "solution above the threshold does not solve s x = x t".into(),
                                x.clone(),
                            ),
                            None => outcome(
                                "threshold",
                                CheckStatus::Pass,
                                format!(
                                    "{} solutions above the threshold solve s x = x t",
                                    long.count()
                                ),
                            ),
                        }
                    };
                    (completeness, threshold_check)
                }
            };
            vec![membership, completeness, threshold_check]
        }
    };
    Ok(VerifyReport {
        degree: d,
        seed: opts.seed,
        checks,
    })
}
