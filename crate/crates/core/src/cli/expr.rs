//! Expression grammar for the command line:
//!
//! ```text
//! sum     := product ('+' product)*
//! product := power ('*'? power)*
//! power   := atom ('^' digits)?
//! atom    := letter | '0' | '1' | '(' sum ')'
//! ```
//!
//! Linear equations are `summand ('+' summand)* '=' sum` where a summand is
//! `A.x.B`, `A.x`, `x.B` or `x` and `A`, `B` are `.`-separated products.

use crate::algebra::{AlgebraError, Element};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Letter(u8),
    Const(bool),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Power(Box<Expr>, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("column {column}: {message}")]
pub struct ExprError {
    pub column: usize,
    pub message: String,
}

impl Expr {
    /// Number of generators needed for the letters used.
    pub fn min_alphabet(&self) -> usize {
        match self {
            Expr::Letter(g) => *g as usize + 1,
            Expr::Const(_) => 0,
            Expr::Sum(v) | Expr::Product(v) => v.iter().map(Expr::min_alphabet).max().unwrap_or(0),
            Expr::Power(e, _) => e.min_alphabet(),
        }
    }

    pub fn eval(&self, k: usize) -> Result<Element, AlgebraError> {
        Ok(match self {
            Expr::Letter(g) => Element::generator(*g, k)?,
            Expr::Const(true) => Element::one(k),
            Expr::Const(false) => Element::zero(k),
            Expr::Sum(v) => v
                .iter()
                .try_fold(Element::zero(k), |acc, e| acc.try_add(&e.eval(k)?))?,
            Expr::Product(v) => v
                .iter()
                .try_fold(Element::one(k), |acc, e| acc.try_mul(&e.eval(k)?))?,
            Expr::Power(e, n) => e.eval(k)?.power(*n),
        })
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    base: usize,
}

impl Parser {
    fn new(src: &str, base: usize) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            base,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError {
            column: self.base + self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Expr, ExprError> {
        let mut terms = vec![self.product()?];
        while self.peek() == Some('+') {
            self.pos += 1;
            terms.push(self.product()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Sum(terms)
        })
    }

    fn product(&mut self) -> Result<Expr, ExprError> {
        let mut factors = vec![self.power()?];
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    factors.push(self.power()?);
                }
                Some(c) if c == '(' || c.is_ascii_lowercase() || c == '0' || c == '1' => {
                    factors.push(self.power()?)
                }
                _ => break,
            }
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            Expr::Product(factors)
        })
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an exponent");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        match digits.parse::<usize>() {
            Ok(n) if n <= 4096 => Ok(Expr::Power(Box::new(base), n)),
            _ => {
                self.pos = start;
                self.err("exponent too large")
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                Ok(Expr::Letter(c as u8 - b'a'))
            }
            Some('0') => {
                self.pos += 1;
                Ok(Expr::Const(false))
            }
            Some('1') => {
                self.pos += 1;
                Ok(Expr::Const(true))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_at(src: &str, base: usize) -> Result<Expr, ExprError> {
    let mut p = Parser::new(src, base);
    let e = p.sum()?;
    if p.peek().is_some() {
        return p.err(format!("unexpected '{}'", p.chars[p.pos]));
    }
    Ok(e)
}

pub fn parse_expr(src: &str) -> Result<Expr, ExprError> {
    parse_at(src, 1)
}

/// `sum_i A_i x B_i = rhs` before evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearExpr {
    pub summands: Vec<(Expr, Expr)>,
    pub rhs: Expr,
}

impl LinearExpr {
    pub fn min_alphabet(&self) -> usize {
        self.summands
            .iter()
            .flat_map(|(a, b)| [a.min_alphabet(), b.min_alphabet()])
            .chain([self.rhs.min_alphabet()])
            .max()
            .unwrap_or(0)
    }
}

/// Splits `s` at `sep` outside parentheses, returning pieces with their
/// character offsets.
fn split_top(s: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let (mut depth, mut start_byte, mut start_char) = (0i32, 0usize, 0usize);
    for (ci, (bi, c)) in s.char_indices().enumerate() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push((start_char, &s[start_byte..bi]));
                start_byte = bi + c.len_utf8();
                start_char = ci + 1;
            }
            _ => {}
        }
    }
    out.push((start_char, &s[start_byte..]));
    out
}

fn product_of(parts: &[(usize, &str)]) -> Result<Expr, ExprError> {
    let factors = parts
        .iter()
        .map(|(off, p)| parse_at(p, off + 1))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match factors.len() {
        0 => Expr::Const(true),
        1 => factors.into_iter().next().unwrap(),
        _ => Expr::Product(factors),
    })
}

pub fn parse_linear(src: &str) -> Result<LinearExpr, ExprError> {
    let sides = split_top(src, '=');
    if sides.len() != 2 {
        let column = sides.get(1).map_or(src.chars().count() + 1, |s| s.0);
        return Err(ExprError {
            column,
            message: "expected exactly one '='".into(),
        });
    }
    let (lo, lhs) = sides[0];
    let (ro, rhs) = sides[1];
    let rhs = parse_at(rhs, ro + 1)?;
    let mut summands = Vec::new();
    for (so, summand) in split_top(lhs, '+') {
        let parts: Vec<(usize, &str)> = split_top(summand, '.')
            .into_iter()
            .map(|(o, p)| (lo + so + o, p))
            .collect();
        let xs: Vec<usize> = (0..parts.len())
            .filter(|&i| parts[i].1.trim() == "x")
            .collect();
        if xs.len() != 1 {
            return Err(ExprError {
                column: lo + so + 1,
                message: "each summand needs exactly one factor x".into(),
            });
        }
        let i = xs[0];
        summands.push((product_of(&parts[..i])?, product_of(&parts[i + 1..])?));
    }
    Ok(LinearExpr { summands, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str, k: usize) -> String {
        parse_expr(s).unwrap().eval(k).unwrap().to_string()
    }

    #[test]
    fn expressions() {
        assert_eq!(ev("ba + ab", 2), "ab + ba");
        assert_eq!(ev("(a+1)^2", 2), "1 + aa");
        assert_eq!(ev("(a+b)(a+b)", 2), "aa + ab + ba + bb");
        assert_eq!(ev("a*b*a + 1 + ba", 2), "1 + ba + aba");
        assert_eq!(ev("a + a", 2), "0");
        assert_eq!(parse_expr("abac").unwrap().min_alphabet(), 3);
        assert_eq!(parse_expr("a + ?").unwrap_err().column, 5);
        assert_eq!(parse_expr("(a").unwrap_err().column, 3);
        assert!(parse_expr("a^").is_err());
    }

    #[test]
    fn linear_equations() {
        let l = parse_linear("a.x + x.b = 0").unwrap();
        assert_eq!(l.summands.len(), 2);
        assert_eq!(l.summands[0], (Expr::Letter(0), Expr::Const(true)));
        assert_eq!(l.summands[1], (Expr::Const(true), Expr::Letter(1)));
        let l = parse_linear("(ab+1).x.(c) + x = ab").unwrap();
        assert_eq!(l.min_alphabet(), 3);
        assert_eq!(parse_linear("a.b = 0").unwrap_err().column, 1);
        assert!(parse_linear("a.x").is_err());
        assert_eq!(parse_linear("a.x + x.? = 0").unwrap_err().column, 9);
    }
}
