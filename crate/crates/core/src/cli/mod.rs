//! Command-line front end: text or JSON reports, exit codes 0 (success),
//! 1 (falsification or contradiction), 2 (usage or parse error) and
//! 3 (resource cap refusal).

pub mod expr;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::Element;
use crate::equation::MonomialEquation;
use crate::gf2::{
    exhaustive_solutions, kernel_bounded, solve_affine, LinearError, LinearXEquation, OracleLimits,
};
use crate::homsys::{
    align, enumerate_monomial_solutions, scan_profiles, Alignment, HomSystem, HomsysError,
    MonomialAssignment,
};
use crate::solver::{
    centralizer, reduce_general, reduce_two_block, solve_conjugation, verify_family, CheckStatus,
    ConjugationResult, PeriodicityCheck, SolutionFamily, SolverError, TwoBlockOutcome,
    VerifyOptions,
};
use expr::{parse_expr, parse_linear, ExprError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "freealg",
    version,
    about = "Equations in the free associative algebra over GF(2)"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Number of generators; inferred from the inputs when absent (at least 2).
    #[arg(long, global = true)]
    pub alphabet: Option<usize>,
    /// Degree cap for searches and oracles.
    #[arg(long, global = true, default_value_t = 12)]
    pub max_degree: usize,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Maximum unknowns per graded layer of the linear oracle.
    #[arg(long, global = true, env = "FREEALG_COLUMN_CAP", default_value_t = OracleLimits::default().column_cap)]
    pub column_cap: usize,
    /// Maximum candidates of exhaustive searches.
    #[arg(long, global = true, env = "FREEALG_CANDIDATE_CAP", default_value_t = OracleLimits::default().candidate_cap)]
    pub candidate_cap: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normalize an expression such as "(a+1)^2 b".
    Eval {
        /// Expression over the letters a, b, c, ... with +, juxtaposition, ^, parentheses.
        expr: String,
    },
    /// Centralizer of u up to the degree cap.
    Centralizer {
        /// Element whose centralizer is computed.
        #[arg(long)]
        u: String,
        /// Write the family JSON to this file.
        #[arg(long)]
        emit_family: Option<String>,
    },
    /// Solutions of u x = x v.
    SolveConjugation {
        /// Left coefficient.
        #[arg(long)]
        u: String,
        /// Right coefficient.
        #[arg(long)]
        v: String,
        /// Write the family JSON to this file.
        #[arg(long)]
        emit_family: Option<String>,
    },
    /// Reduce u1 x u2 ... x un = v1 x v2 ... x vn to s x = x t.
    Reduce {
        #[command(flatten)]
        coeffs: Coeffs,
        /// A known nonzero solution.
        #[arg(long)]
        hint: Option<String>,
        /// Write the family JSON to this file.
        #[arg(long)]
        emit_family: Option<String>,
    },
    /// Solutions up to the degree cap by linear algebra or exhaustive search.
    Oracle {
        /// Linear equation "A.x.B + ... = 0" or "= <element>".
        #[arg(long, conflicts_with_all = ["u_coeffs", "v_coeffs"])]
        eq: Option<String>,
        #[command(flatten)]
        coeffs: OptCoeffs,
    },
    /// Monomial solutions of a homogeneous system file.
    Homsys {
        /// System file with `var`, `coef` and `eq` lines.
        file: String,
        /// Comma-separated degrees, one per variable; scans profiles when absent.
        #[arg(long)]
        profile: Option<String>,
    },
    /// Check a family file against an equation.
    Verify {
        #[command(flatten)]
        coeffs: Coeffs,
        /// Family JSON file.
        #[arg(long)]
        family: String,
        /// Random family members sampled for membership.
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
}

#[derive(clap::Args, Debug)]
pub struct Coeffs {
    /// Left coefficients "u1;u2;...".
    #[arg(long)]
    pub u_coeffs: String,
    /// Right coefficients "v1;v2;...".
    #[arg(long)]
    pub v_coeffs: String,
}

#[derive(clap::Args, Debug)]
pub struct OptCoeffs {
    /// Left coefficients "u1;u2;...".
    #[arg(long, requires = "v_coeffs")]
    pub u_coeffs: Option<String>,
    /// Right coefficients "v1;v2;...".
    #[arg(long, requires = "u_coeffs")]
    pub v_coeffs: Option<String>,
}

/// Settings that determine a run's output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub alphabet: usize,
    pub max_degree: usize,
    pub column_cap: usize,
    pub candidate_cap: u64,
    pub format: Format,
    pub seed: u64,
}

impl RunConfig {
    pub fn limits(&self) -> OracleLimits {
        OracleLimits {
            column_cap: self.column_cap,
            candidate_cap: self.candidate_cap,
        }
    }
}

/// A failed run: message and exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            kind: "usage",
            message: message.into(),
        }
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        Failure {
            code: EXIT_USAGE,
            kind: "parse",
            message: format!("parse error at {e}"),
        }
    }
}

impl From<SolverError> for Failure {
    fn from(e: SolverError) -> Self {
        let (code, kind) = match &e {
            _ if e.is_cap() => (EXIT_CAP, "cap"),
            SolverError::Falsified(_) | SolverError::NoReduction | SolverError::HintNotSolution => {
                (EXIT_FALSIFIED, "falsified")
            }
            _ => (EXIT_USAGE, "input"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

impl From<LinearError> for Failure {
    fn from(e: LinearError) -> Self {
        SolverError::from(e).into()
    }
}

impl From<HomsysError> for Failure {
    fn from(e: HomsysError) -> Self {
        let (code, kind) = match e {
            HomsysError::ResourceCap { .. } => (EXIT_CAP, "cap"),
            HomsysError::Parse { .. } => (EXIT_USAGE, "parse"),
            _ => (EXIT_USAGE, "input"),
        };
        Failure {
            code,
            kind,
            message: e.to_string(),
        }
    }
}

/// Result of a command: report fields, text lines and exit code.
struct Output {
    code: i32,
    json: Value,
    text: Vec<String>,
}

impl Output {
    fn ok(json: Value, text: Vec<String>) -> Self {
        Output {
            code: EXIT_OK,
            json,
            text,
        }
    }
}

fn strs(v: &[Element]) -> Vec<String> {
    v.iter().map(Element::to_string).collect()
}

fn list(v: &[Element]) -> String {
    if v.is_empty() {
        "(none)".into()
    } else {
        strs(v).join(", ")
    }
}

/// Parses an expression into an element over `k` generators.
fn element(text: &str, k: usize) -> Result<Element, Failure> {
    Ok(parse_expr(text)?
        .eval(k)
        .map_err(|e| Failure::usage(e.to_string()))?)
}

fn split_coeffs(text: &str) -> Vec<&str> {
    text.split(';').collect()
}

fn coeff_alphabet(text: &str) -> Result<usize, Failure> {
    let mut k = 0;
    for part in split_coeffs(text) {
        k = k.max(parse_expr(part)?.min_alphabet());
    }
    Ok(k)
}

fn parse_coeffs(text: &str, k: usize) -> Result<Vec<Element>, Failure> {
    split_coeffs(text)
        .into_iter()
        .map(|p| element(p, k))
        .collect()
}

fn equation(c: &Coeffs, k: usize) -> Result<MonomialEquation, Failure> {
    MonomialEquation::new(parse_coeffs(&c.u_coeffs, k)?, parse_coeffs(&c.v_coeffs, k)?)
        .map_err(|e| Failure::usage(e.to_string()))
}

fn emit(path: &Option<String>, family: &SolutionFamily) -> Result<(), Failure> {
    if let Some(p) = path {
        std::fs::write(p, family.to_json() + "\n")
            .map_err(|e| Failure::usage(format!("cannot write {p}: {e}")))?;
    }
    Ok(())
}

fn read(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {path}: {e}")))
}

/// Letters used in the string values of a family file.
fn family_alphabet(text: &str) -> Result<usize, Failure> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Failure::usage(format!("invalid family JSON: {e}")))?;
    fn walk(v: &Value, key: Option<&str>, k: &mut usize) {
        match v {
            Value::String(s) if key != Some("kind") => {
                if let Ok(e) = parse_expr(s) {
                    *k = (*k).max(e.min_alphabet());
                }
            }
            Value::Array(a) => a.iter().for_each(|x| walk(x, key, k)),
            Value::Object(o) => o.iter().for_each(|(kk, x)| walk(x, Some(kk), k)),
            _ => {}
        }
    }
    let mut k = 0;
    walk(&v, None, &mut k);
    Ok(k)
}

fn conjugation_json(r: &ConjugationResult) -> Value {
    json!({
        "status": format!("{:?}", r.status()).to_lowercase(),
        "family": r.family.as_ref().map(SolutionFamily::to_json_value),
        "generators": strs(r.generators()),
        "classes": r.classes,
        "period": r.period,
        "search_degree": r.search_degree,
        "bound": r.degree_bound.to_string(),
        "truncated": r.truncated,
        "kernel_dimension": r.kernel_dimension,
    })
}

fn conjugation_text(r: &ConjugationResult) -> Vec<String> {
    vec![
        format!("status: {:?}", r.status()),
        format!("generators: {}", list(r.generators())),
        format!("classes: {:?} (period {})", r.classes, r.period),
        format!(
            "searched up to degree {} (bound {}{})",
            r.search_degree,
            r.degree_bound,
            if r.truncated { ", truncated" } else { "" }
        ),
        format!("kernel dimension: {}", r.kernel_dimension),
    ]
}

fn assignment_json(a: &MonomialAssignment) -> Vec<String> {
    a.iter()
        .map(|w| {
            if w.is_empty() {
                "1".to_string()
            } else {
                w.letters().iter().map(|&g| (b'a' + g) as char).collect()
            }
        })
        .collect()
}

fn run_command(cli: &Cli, cfg: &mut RunConfig) -> Result<Output, Failure> {
    let limits = cfg.limits();
    let d = cfg.max_degree;
    let pick = |inferred: usize| cli.alphabet.unwrap_or(inferred.max(2));
    match &cli.command {
        Command::Eval { expr } => {
            let e = parse_expr(expr)?;
            cfg.alphabet = pick(e.min_alphabet());
            let x = e
                .eval(cfg.alphabet)
                .map_err(|e| Failure::usage(e.to_string()))?;
            let deg = x.deg();
            Ok(Output::ok(
                json!({"element": x.to_string(), "degree": deg, "terms": x.len()}),
                vec![
                    x.to_string(),
                    format!("degree: {}", deg.map_or("-inf".into(), |d| d.to_string())),
                ],
            ))
        }
        Command::Centralizer { u, emit_family } => {
            let pu = parse_expr(u)?;
            cfg.alphabet = pick(pu.min_alphabet());
            let u = element(u, cfg.alphabet)?;
            let r = centralizer(&u, d, &limits)?;
            emit(emit_family, &r.family)?;
            Ok(Output::ok(
                json!({
                    "u": u.to_string(),
                    "root": r.root.to_string(),
                    "polynomial": r.polynomial,
                    "family": r.family.to_json_value(),
                    "degree_bound": r.degree_bound,
                    "kernel_dimension": r.kernel_dimension,
                }),
                vec![
                    format!("u = {u}"),
                    format!("root: {}", r.root),
                    format!(
                        "centralizer: polynomials in {} (checked up to degree {})",
                        r.root, r.degree_bound
                    ),
                    format!("kernel dimension: {}", r.kernel_dimension),
                ],
            ))
        }
        Command::SolveConjugation { u, v, emit_family } => {
            let k = parse_expr(u)?
                .min_alphabet()
                .max(parse_expr(v)?.min_alphabet());
            cfg.alphabet = pick(k);
            let (u, v) = (element(u, cfg.alphabet)?, element(v, cfg.alphabet)?);
            let r = solve_conjugation(&u, &v, d, &limits)?;
            if let Some(f) = &r.family {
                emit(emit_family, f)?;
            }
            let mut text = vec![format!("{u} x = x {v}")];
            text.extend(conjugation_text(&r));
            let mut j = conjugation_json(&r);
            j["u"] = json!(u.to_string());
            j["v"] = json!(v.to_string());
            Ok(Output::ok(j, text))
        }
        Command::Reduce {
            coeffs,
            hint,
            emit_family,
        } => {
            let mut k = coeff_alphabet(&coeffs.u_coeffs)?.max(coeff_alphabet(&coeffs.v_coeffs)?);
            if let Some(h) = hint {
                k = k.max(parse_expr(h)?.min_alphabet());
            }
            cfg.alphabet = pick(k);
            let eq = equation(coeffs, cfg.alphabet)?;
            let hint = hint
                .as_deref()
                .map(|h| element(h, cfg.alphabet))
                .transpose()?;
            reduce(&eq, hint.as_ref(), d, &limits, emit_family)
        }
        Command::Oracle { eq, coeffs } => {
            if let Some(text) = eq {
                let lin = parse_linear(text)?;
                cfg.alphabet = pick(lin.min_alphabet());
                let k = cfg.alphabet;
                let summands = lin
                    .summands
                    .iter()
                    .map(|(a, b)| Ok((a.eval(k)?, b.eval(k)?)))
                    .collect::<Result<Vec<_>, crate::algebra::AlgebraError>>()
                    .map_err(|e| Failure::usage(e.to_string()))?;
                let rhs = lin.rhs.eval(k).map_err(|e| Failure::usage(e.to_string()))?;
                let leq = LinearXEquation::new(summands, rhs).map_err(Failure::from)?;
                linear_oracle(&leq, d, &limits)
            } else if let (Some(u), Some(v)) = (&coeffs.u_coeffs, &coeffs.v_coeffs) {
                let c = Coeffs {
                    u_coeffs: u.clone(),
                    v_coeffs: v.clone(),
                };
                cfg.alphabet = pick(coeff_alphabet(u)?.max(coeff_alphabet(v)?));
                let meq = equation(&c, cfg.alphabet)?;
                match meq.to_linear() {
                    Some(leq) => linear_oracle(&leq, d, &limits),
                    None => {
                        let sols = exhaustive_solutions(&meq, d, &limits)?;
                        Ok(Output::ok(
                            json!({"method": "exhaustive", "degree": d, "solutions": strs(&sols)}),
                            vec![
                                format!("{meq}"),
                                format!("{} nonzero solutions of degree <= {d}", sols.len()),
                                format!("solutions: {}", list(&sols)),
                            ],
                        ))
                    }
                }
            } else {
                Err(Failure::usage("oracle needs --eq or --u-coeffs/--v-coeffs"))
            }
        }
        Command::Homsys { file, profile } => {
            let text = read(file)?;
            let sys = HomSystem::parse(&text, cli.alphabet)?;
            cfg.alphabet = sys.alphabet;
            homsys(&sys, profile.as_deref(), d, cfg.candidate_cap as u128)
        }
        Command::Verify {
            coeffs,
            family,
            samples,
        } => {
            let text = read(family)?;
            let k = coeff_alphabet(&coeffs.u_coeffs)?
                .max(coeff_alphabet(&coeffs.v_coeffs)?)
                .max(family_alphabet(&text)?);
            cfg.alphabet = pick(k);
            let eq = equation(coeffs, cfg.alphabet)?;
            let fam = SolutionFamily::from_json(&text, cfg.alphabet)
                .map_err(|e| Failure::usage(e.to_string()))?;
            let opts = VerifyOptions {
                degree: d,
                samples: *samples,
                seed: cfg.seed,
                limits,
            };
            let report = verify_family(&eq, &fam, &opts)?;
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "status": c.status,
                        "detail": c.detail,
                        "witness": c.witness.as_ref().map(Element::to_string),
                    })
                })
                .collect();
            let mut text = vec![format!("{eq}")];
            for c in &report.checks {
                let status = match c.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Fail => "FAIL",
                    CheckStatus::Vacuous => "vacuous",
                    CheckStatus::Skipped => "skipped",
                };
                text.push(format!("{:<13} {status}: {}", c.name, c.detail));
                if let Some(w) = &c.witness {
                    text.push(format!("{:<13} witness: {w}", ""));
                }
            }
            let passed = report.passed();
            text.push(if passed {
                "verdict: pass".into()
            } else {
                "verdict: FAIL".into()
            });
            Ok(Output {
                code: if passed { EXIT_OK } else { EXIT_FALSIFIED },
                json: json!({
                    "degree": report.degree,
                    "passed": passed,
                    "checks": checks,
                    "first_failure": report.first_failure().map(|c| json!({
                        "name": c.name,
                        "witness": c.witness.as_ref().map(Element::to_string),
                    })),
                }),
                text,
            })
        }
    }
}

fn linear_oracle(
    leq: &LinearXEquation,
    d: usize,
    limits: &OracleLimits,
) -> Result<Output, Failure> {
    if leq.rhs.is_zero() {
        let k = kernel_bounded(leq, d, limits)?;
        Ok(Output::ok(
            json!({"method": "linear", "degree": d, "kernel_dimension": k.dimension(), "kernel": strs(&k.basis)}),
            vec![
                format!("kernel dimension up to degree {d}: {}", k.dimension()),
                format!("basis: {}", list(&k.basis)),
            ],
        ))
    } else {
        let a = solve_affine(leq, d, limits)?;
        let p = a.particular.as_ref().map(Element::to_string);
        Ok(Output::ok(
            json!({
                "method": "linear",
                "degree": d,
                "particular": p,
                "kernel_dimension": a.kernel.dimension(),
                "kernel": strs(&a.kernel.basis),
            }),
            vec![
                format!(
                    "particular solution: {}",
                    p.as_deref().unwrap_or("(none up to the degree cap)")
                ),
                format!(
                    "kernel dimension up to degree {d}: {}",
                    a.kernel.dimension()
                ),
                format!("basis: {}", list(&a.kernel.basis)),
            ],
        ))
    }
}

fn reduce(
    eq: &MonomialEquation,
    hint: Option<&Element>,
    d: usize,
    limits: &OracleLimits,
    emit_family: &Option<String>,
) -> Result<Output, Failure> {
    let deg = |e: &Element| e.deg().unwrap_or(0);
    let mut text = vec![format!("{eq}")];
    if eq.n() == 2 && deg(&eq.u()[0]) != deg(&eq.v()[0]) && hint.is_none() {
        let (u, v) = (eq.u(), eq.v());
        return match reduce_two_block(&u[0], &u[1], &v[0], &v[1], d, limits)? {
            TwoBlockOutcome::Reduced(r) => {
                let fam = r.family();
                emit(emit_family, &fam)?;
                text.extend([
                    "route: two-block".to_string(),
                    format!(
                        "s = {}, t = {}{}",
                        r.s,
                        r.t,
                        if r.swapped { " (sides swapped)" } else { "" }
                    ),
                    format!("threshold: {}", r.threshold),
                    format!(
                        "short solutions up to degree {}: {}",
                        r.short_degree,
                        list(&r.short_solutions)
                    ),
                ]);
                text.extend(conjugation_text(&r.conjugation));
                Ok(Output::ok(
                    json!({
                        "route": "two-block",
                        "s": r.s.to_string(),
                        "t": r.t.to_string(),
                        "swapped": r.swapped,
                        "threshold": r.threshold,
                        "family": fam.to_json_value(),
                        "conjugation": conjugation_json(&r.conjugation),
                        "short_degree": r.short_degree,
                        "short_solutions": strs(&r.short_solutions),
                    }),
                    text,
                ))
            }
            TwoBlockOutcome::NoLongSolutions {
                threshold,
                short_solutions,
                short_degree,
            } => {
                text.extend([
                    "route: two-block".to_string(),
                    format!("no solutions above degree {threshold}"),
                    format!(
                        "short solutions up to degree {short_degree}: {}",
                        list(&short_solutions)
                    ),
                ]);
                Ok(Output::ok(
                    json!({
                        "route": "two-block",
                        "no_long_solutions": true,
                        "threshold": threshold,
                        "short_degree": short_degree,
                        "short_solutions": strs(&short_solutions),
                    }),
                    text,
                ))
            }
        };
    }
    let r = reduce_general(eq, hint, d, limits)?;
    let fam = r.family();
    emit(emit_family, &fam)?;
    let route = match &r.route {
        crate::solver::ReductionRoute::Boundary => "boundary".to_string(),
        crate::solver::ReductionRoute::Hint => "hint".to_string(),
        crate::solver::ReductionRoute::Split { at } => format!("split at {at}"),
    };
    let periodicity = match &r.periodicity {
        PeriodicityCheck::Holds { witness } => {
            json!({"status": "holds", "witness": witness.to_string()})
        }
        PeriodicityCheck::Violated {
            witness,
            side,
            start,
            half,
        } => json!({
            "status": "violated",
            "witness": witness.to_string(),
            "side": side.to_string(),
            "start": start,
            "half": half,
        }),
        PeriodicityCheck::Unverifiable => json!({"status": "unverifiable"}),
    };
    let cases: Vec<Value> = r
        .decomposition
        .indices
        .iter()
        .enumerate()
        .map(|(i, c)| match c {
            Some(c) => json!({
                "index": c.index,
                "case": format!("{:?}", c.case),
                "swapped": c.swapped,
                "s_i": c.s_i.to_string(),
                "t_i": c.t_i.to_string(),
                "tau": c.tau.as_ref().map(Element::to_string),
                "mu": c.mu.as_ref().map(Element::to_string),
            }),
            None => json!({"index": i + 1, "case": null}),
        })
        .collect();
    text.push(format!("route: {route}"));
    text.push(format!("s = {}, t = {}", r.s, r.t));
    text.push(format!("threshold: {}", r.threshold));
    text.push(format!("offsets: {:?}", r.shift_profile.offsets));
    for c in r.decomposition.indices.iter().flatten() {
        text.push(format!("index {}: {:?}", c.index, c.case));
    }
    if !r.hint_pairs.is_empty() {
        text.push(format!("hint agrees: {}", r.hint_agrees == Some(true)));
    }
    text.push(format!(
        "periodicity: {}",
        periodicity["status"].as_str().unwrap_or("")
    ));
    for note in &r.scope_notes {
        text.push(format!("note: {note}"));
    }
    text.push(format!(
        "short solutions up to degree {}: {}",
        r.short_degree,
        list(&r.short_solutions)
    ));
    Ok(Output::ok(
        json!({
            "route": route,
            "s": r.s.to_string(),
            "t": r.t.to_string(),
            "threshold": r.threshold,
            "family": fam.to_json_value(),
            "stripped": [r.stripped.0, r.stripped.1],
            "split_points": r.split_points,
            "offsets": r.shift_profile.offsets,
            "decomposition": cases,
            "hint_pairs": r.hint_pairs.iter().map(|(s, t)| [s.to_string(), t.to_string()]).collect::<Vec<_>>(),
            "hint_agrees": r.hint_agrees,
            "periodicity": periodicity,
            "scope_notes": r.scope_notes,
            "conjugation": r.conjugation.as_ref().map(conjugation_json),
            "short_degree": r.short_degree,
            "short_solutions": strs(&r.short_solutions),
        }),
        text,
    ))
}

fn homsys(sys: &HomSystem, profile: Option<&str>, d: usize, cap: u128) -> Result<Output, Failure> {
    let names: Vec<&str> = sys.variables.iter().map(|v| v.name.as_str()).collect();
    let fixed: Option<Vec<usize>> = sys.variables.iter().map(|v| v.degree).collect();
    let profile = match profile {
        Some(p) => Some(
            p.split(',')
                .map(|x| x.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| Failure::usage(format!("invalid profile '{p}'")))?,
        ),
        None => fixed,
    };
    let mut text = Vec::new();
    let render = |sols: &[MonomialAssignment]| -> Vec<String> {
        sols.iter()
            .map(|a| {
                names
                    .iter()
                    .zip(assignment_json(a))
                    .map(|(n, w)| format!("{n} = {w}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect()
    };
    match profile {
        Some(profile) => {
            let alignment = align(sys, &profile)?;
            let (code, summary) = match &alignment {
                Alignment::Contradiction(c) => {
                    text.push(format!(
                        "contradiction in equation {} at position {}: letters {} and {}",
                        c.equation,
                        c.position,
                        (b'a' + c.letters.0) as char,
                        (b'a' + c.letters.1) as char
                    ));
                    (
                        EXIT_FALSIFIED,
                        json!({
                            "status": "contradiction",
                            "equation": c.equation,
                            "position": c.position,
                            "letters": [((b'a' + c.letters.0) as char).to_string(), ((b'a' + c.letters.1) as char).to_string()],
                        }),
                    )
                }
                Alignment::Partition(p) => {
                    text.push(format!(
                        "{} classes, {} free",
                        p.class_count(),
                        p.free_classes().len()
                    ));
                    (
                        EXIT_OK,
                        json!({
                            "status": "partition",
                            "classes": p.classes,
                            "pinned": p.pinned.iter().map(|g| g.map(|g| ((b'a' + g) as char).to_string())).collect::<Vec<_>>(),
                        }),
                    )
                }
            };
            let sols = enumerate_monomial_solutions(sys, &profile, cap)?;
            text.push(format!(
                "{} monomial solutions for profile {profile:?}",
                sols.len()
            ));
            text.extend(render(&sols));
            let sols_json: Vec<Vec<String>> = sols.iter().map(assignment_json).collect();
            Ok(Output {
                code,
                json: json!({"variables": names, "profile": profile, "alignment": summary, "solutions": sols_json}),
                text,
            })
        }
        None => {
            let scan = scan_profiles(sys, d, cap)?;
            let mut entries = Vec::new();
            for (profile, sols) in &scan {
                text.push(format!(
                    "profile {profile:?}: {} monomial solutions",
                    sols.len()
                ));
                text.extend(render(sols).into_iter().map(|s| format!("  {s}")));
                entries.push(json!({
                    "profile": profile,
                    "solutions": sols.iter().map(assignment_json).collect::<Vec<_>>(),
                }));
            }
            if scan.is_empty() {
                text.push(format!("no balanced profile with degrees <= {d}"));
            }
            Ok(Output::ok(
                json!({"variables": names, "max_degree": d, "profiles": entries}),
                text,
            ))
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Eval { .. } => "eval",
        Command::Centralizer { .. } => "centralizer",
        Command::SolveConjugation { .. } => "solve-conjugation",
        Command::Reduce { .. } => "reduce",
        Command::Oracle { .. } => "oracle",
        Command::Homsys { .. } => "homsys",
        Command::Verify { .. } => "verify",
    }
}

/// Runs the command line `args` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let mut cfg = RunConfig {
        alphabet: cli.alphabet.unwrap_or(2),
        max_degree: cli.max_degree,
        column_cap: cli.column_cap,
        candidate_cap: cli.candidate_cap,
        format: cli.format,
        seed: cli.seed,
    };
    let result = if cfg.alphabet == 0 || cfg.alphabet > 26 {
        Err(Failure::usage("--alphabet must be between 1 and 26"))
    } else if cfg.column_cap == 0 || cfg.candidate_cap == 0 {
        Err(Failure::usage("caps must be positive"))
    } else {
        run_command(&cli, &mut cfg)
    };
    let name = command_name(&cli.command);
    let code = match &result {
        Ok(o) => o.code,
        Err(f) => f.code,
    };
    match cli.format {
        Format::Json => {
            let mut report = serde_json::Map::new();
            report.insert("command".into(), json!(name));
            report.insert(
                "config".into(),
                serde_json::to_value(&cfg).expect("config serializes"),
            );
            report.insert("exit_code".into(), json!(code));
            match &result {
                Ok(o) => {
                    report.insert("result".into(), o.json.clone());
                }
                Err(f) => {
                    report.insert(
                        "error".into(),
                        json!({"kind": f.kind, "message": f.message}),
                    );
                }
            }
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&Value::Object(report)).expect("report serializes")
            );
        }
        Format::Text => {
            if let Ok(o) = &result {
                for line in &o.text {
                    let _ = writeln!(out, "{line}");
                }
                let _ = writeln!(
                    out,
                    "config: k={} D={} column_cap={} candidate_cap={} seed={}",
                    cfg.alphabet, cfg.max_degree, cfg.column_cap, cfg.candidate_cap, cfg.seed
                );
            }
        }
    }
    if let Err(f) = &result {
        let _ = writeln!(err, "error: {}", f.message);
    }
    code
}
