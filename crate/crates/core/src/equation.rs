//! One-variable monomial equations `u_1 x u_2 x ... x u_n = v_1 x v_2 x ... x v_n`.

use std::fmt;

use crate::algebra::{AlgebraError, Element};
use crate::gf2::LinearXEquation;
use crate::words::{self, ShiftProfile, WordsError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EquationError {
    #[error("an equation needs at least {min} coefficients per side, got {got}")]
    TooShort { min: usize, got: usize },
    #[error("sides have different numbers of coefficients ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("coefficient {side}_{index} is zero")]
    ZeroCoefficient { side: char, index: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `u_1 x u_2 ... x u_n = v_1 x v_2 ... x v_n` with nonzero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialEquation {
    u: Vec<Element>,
    v: Vec<Element>,
    alphabet: usize,
}

impl MonomialEquation {
    pub fn new(u: Vec<Element>, v: Vec<Element>) -> Result<Self, EquationError> {
        Self::with_min_len(u, v, 2)
    }

    /// Allows a single coefficient per side (no occurrence of `x`); used
    /// for the pieces left after cancelling common ends.
    pub(crate) fn with_min_len(
        u: Vec<Element>,
        v: Vec<Element>,
        min: usize,
    ) -> Result<Self, EquationError> {
        if u.len() != v.len() {
            return Err(EquationError::LengthMismatch(u.len(), v.len()));
        }
        if u.len() < min {
            return Err(EquationError::TooShort { min, got: u.len() });
        }
        let alphabet = u[0].alphabet();
        for (side, coeffs) in [('u', &u), ('v', &v)] {
            for (i, c) in coeffs.iter().enumerate() {
                if c.alphabet() != alphabet {
                    return Err(AlgebraError::AlphabetMismatch {
                        left: alphabet,
                        right: c.alphabet(),
                    }
                    .into());
                }
                if c.is_zero() {
                    return Err(EquationError::ZeroCoefficient { side, index: i + 1 });
                }
            }
        }
        Ok(MonomialEquation { u, v, alphabet })
    }

    /// `u x = x v`.
    pub fn conjugation(u: &Element, v: &Element) -> Result<Self, EquationError> {
        let k = u.alphabet();
        Self::new(
            vec![u.clone(), Element::one(k)],
            vec![Element::one(k), v.clone()],
        )
    }

    /// `u_1 x u_2 = v_1 x v_2`.
    pub fn two_block(
        u1: &Element,
        u2: &Element,
        v1: &Element,
        v2: &Element,
    ) -> Result<Self, EquationError> {
        Self::new(vec![u1.clone(), u2.clone()], vec![v1.clone(), v2.clone()])
    }

    /// Parses `"u1;u2;..."` and `"v1;v2;..."` over `alphabet` generators.
    pub fn parse(u: &str, v: &str, alphabet: usize) -> Result<Self, EquationError> {
        let parse_list = |s: &str| -> Result<Vec<Element>, EquationError> {
            let mut out = Vec::new();
            let mut col = 1;
            for part in s.split(';') {
                let e =
                    crate::algebra::parse::parse_element(part, 1, col)?.widen_checked(alphabet)?;
                out.push(e);
                col += part.chars().count() + 1;
            }
            Ok(out)
        };
        Self::new(parse_list(u)?, parse_list(v)?)
    }

    pub fn u(&self) -> &[Element] {
        &self.u
    }

    pub fn v(&self) -> &[Element] {
        &self.v
    }

    /// Number of coefficients per side; `x` occurs `n - 1` times.
    pub fn n(&self) -> usize {
        self.u.len()
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn u_degrees(&self) -> Vec<usize> {
        self.u.iter().map(|c| c.deg().unwrap_or(0)).collect()
    }

    pub fn v_degrees(&self) -> Vec<usize> {
        self.v.iter().map(|c| c.deg().unwrap_or(0)).collect()
    }

    pub fn shift_profile(&self, x_degree: usize) -> Result<ShiftProfile, WordsError> {
        words::shift_profile(&self.u_degrees(), &self.v_degrees(), x_degree)
    }

    fn side(coeffs: &[Element], x: &Element) -> Element {
        let mut acc = coeffs[0].clone();
        for c in &coeffs[1..] {
            acc = &acc * x;
            acc = &acc * c;
        }
        acc
    }

    pub fn lhs(&self, x: &Element) -> Element {
        Self::side(&self.u, x)
    }

    pub fn rhs(&self, x: &Element) -> Element {
        Self::side(&self.v, x)
    }

    /// `lhs(x) + rhs(x)`; zero exactly at solutions.
    pub fn residual(&self, x: &Element) -> Element {
        &self.lhs(x) + &self.rhs(x)
    }

    pub fn is_solution(&self, x: &Element) -> bool {
        x.alphabet() == self.alphabet && self.lhs(x) == self.rhs(x)
    }

    /// The same equation with the sides exchanged.
    pub fn swapped(&self) -> Self {
        MonomialEquation {
            u: self.v.clone(),
            v: self.u.clone(),
            alphabet: self.alphabet,
        }
    }

    /// For `n = 2`: `u_1 · x · u_2 + v_1 · x · v_2 = 0`.
    pub fn to_linear(&self) -> Option<LinearXEquation> {
        if self.n() != 2 {
            return None;
        }
        Some(LinearXEquation::homogeneous(vec![
            (self.u[0].clone(), self.u[1].clone()),
            (self.v[0].clone(), self.v[1].clone()),
        ]))
    }
}

impl fmt::Display for MonomialEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |coeffs: &[Element]| {
            coeffs
                .iter()
                .map(|c| format!("({c})"))
                .collect::<Vec<_>>()
                .join(" x ")
        };
        write!(f, "{} = {}", side(&self.u), side(&self.v))
    }
}

impl fmt::Debug for MonomialEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialEquation({self})")
    }
}
