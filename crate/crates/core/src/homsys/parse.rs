//! Text format: `var x [deg]`, `coef c = <element>`, `eq <names> = <names>`;
//! `#` starts a comment.

use std::collections::HashMap;

use super::{HomSystem, HomsysError, Symbol, Variable};
use crate::algebra::{parse::parse_element, AlgebraError, Element};

fn err(line: usize, column: usize, message: impl Into<String>) -> HomsysError {
    HomsysError::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn from_algebra(e: AlgebraError, line: usize, column: usize) -> HomsysError {
    match e {
        AlgebraError::Parse {
            line,
            column,
            message,
        } => err(line, column, message),
        other => err(line, column, other.to_string()),
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Whitespace-separated tokens of `text` with their 1-based columns.
fn tokens(text: &str, first_column: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (first_column + text[..s].chars().count(), t))
        .collect()
}

/// Parses a system. Without an explicit `alphabet`, the alphabet is the
/// smallest one holding every coefficient letter, and at least 2.
pub(super) fn parse_system(text: &str, alphabet: Option<usize>) -> Result<HomSystem, HomsysError> {
    let mut variables: Vec<Variable> = Vec::new();
    let mut coefficients: Vec<(String, Element)> = Vec::new();
    let mut coef_pos: Vec<(usize, usize)> = Vec::new();
    let mut names: HashMap<String, Symbol> = HashMap::new();
    let mut pending: Vec<(usize, Vec<(usize, &str)>, Vec<(usize, &str)>)> = Vec::new();

    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let body = raw.split('#').next().unwrap_or("");
        let toks = tokens(body, 1);
        let Some(&(kw_col, kw)) = toks.first() else {
            continue;
        };
        let declare = |names: &mut HashMap<String, Symbol>, col: usize, name: &str, sym: Symbol| {
            if !valid_name(name) {
                return Err(err(line, col, format!("invalid name '{name}'")));
            }
            if names.insert(name.to_string(), sym).is_some() {
                return Err(err(line, col, format!("'{name}' is already declared")));
            }
            Ok(())
        };
        match kw {
            "var" => {
                let (col, name) = *toks
                    .get(1)
                    .ok_or_else(|| err(line, kw_col + 3, "expected a variable name"))?;
                declare(&mut names, col, name, Symbol::Var(variables.len()))?;
                let degree = match toks.get(2) {
                    None => None,
                    Some(&(dcol, d)) => match d.parse::<usize>() {
                        Ok(d) if d >= 1 => Some(d),
                        _ => return Err(err(line, dcol, "degree must be a positive integer")),
                    },
                };
                if let Some(&(col, _)) = toks.get(3) {
                    return Err(err(line, col, "unexpected token"));
                }
                variables.push(Variable {
                    name: name.to_string(),
                    degree,
                });
            }
            "coef" => {
                let (col, name) = *toks
                    .get(1)
                    .ok_or_else(|| err(line, kw_col + 4, "expected a coefficient name"))?;
                if toks.get(2).map(|t| t.1) != Some("=") {
                    let col = toks.get(2).map_or(col + name.len(), |t| t.0);
                    return Err(err(line, col, "expected '='"));
                }
                declare(&mut names, col, name, Symbol::Coef(coefficients.len()))?;
                let eq_col = toks[2].0;
                let rest = &body[body
                    .char_indices()
                    .nth(eq_col)
                    .map_or(body.len(), |(i, _)| i)..];
                let e = parse_element(rest, line, eq_col + 1)
                    .map_err(|e| from_algebra(e, line, eq_col + 1))?;
                coefficients.push((name.to_string(), e));
                coef_pos.push((line, eq_col + 1));
            }
            "eq" => {
                let rest = &toks[1..];
                let Some(split) = rest.iter().position(|t| t.1 == "=") else {
                    return Err(err(line, kw_col, "expected '=' between the two sides"));
                };
                let (l, r) = (rest[..split].to_vec(), rest[split + 1..].to_vec());
                if l.is_empty() || r.is_empty() {
                    return Err(err(line, rest[split].0, "both sides must be nonempty"));
                }
                pending.push((line, l, r));
            }
            other => return Err(err(line, kw_col, format!("unknown keyword '{other}'"))),
        }
    }

    let inferred = coefficients
        .iter()
        .map(|(_, c)| c.min_alphabet())
        .max()
        .unwrap_or(0)
        .max(2);
    let k = alphabet.unwrap_or(inferred);
    if k == 0 {
        return Err(err(0, 0, "alphabet must have at least one generator"));
    }
    let coefficients = coefficients
        .into_iter()
        .zip(&coef_pos)
        .map(|((name, c), &(line, col))| {
            let c = c.widen_checked(k).map_err(|e| from_algebra(e, line, col))?;
            if c.is_zero() || !c.is_homogeneous() {
                return Err(err(
                    line,
                    col,
                    format!("coefficient {name} is not homogeneous"),
                ));
            }
            Ok((name, c))
        })
        .collect::<Result<Vec<_>, _>>()?;

    let resolve = |line: usize, side: &[(usize, &str)]| {
        side.iter()
            .map(|&(col, name)| {
                names
                    .get(name)
                    .copied()
                    .ok_or_else(|| err(line, col, format!("undeclared symbol '{name}'")))
            })
            .collect::<Result<Vec<Symbol>, _>>()
    };
    let equations = pending
        .iter()
        .map(|(line, l, r)| Ok((resolve(*line, l)?, resolve(*line, r)?)))
        .collect::<Result<Vec<_>, HomsysError>>()?;
    HomSystem::new(k, variables, coefficients, equations)
}
