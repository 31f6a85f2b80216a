//! Homogeneous monomial systems: substitution checks and position
//! alignment for fixed degree profiles.

mod align;
mod parse;

pub use align::{
    align, align_in_order, brute_force_monomial_solutions, enumerate_monomial_solutions,
    scan_profiles, Alignment, Contradiction, PositionPartition,
};

use std::collections::HashMap;

use crate::algebra::{substitute, AlgebraError, Element, Slot, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomsysError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("coefficient {0} is not homogeneous")]
    NonHomogeneousCoefficient(String),
    #[error("coefficient {0} is not a monomial")]
    NonMonomialCoefficient(String),
    #[error("value of {0} is not homogeneous")]
    NonHomogeneousValue(String),
    #[error("variable {0} has no value")]
    Unassigned(String),
    #[error("profile does not balance equation {equation}: {left} vs {right}")]
    UnbalancedProfile {
        equation: usize,
        left: usize,
        right: usize,
    },
    #[error("profile must give every variable a degree >= 1 ({0} entries expected)")]
    InvalidProfile(usize),
    #[error("search space of {required} assignments exceeds the cap {limit}")]
    ResourceCap { required: u128, limit: u128 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A symbol in an equation side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    Var(usize),
    Coef(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    /// Degree fixed in the system file, if any.
    pub degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSystem {
    pub alphabet: usize,
    pub variables: Vec<Variable>,
    pub coefficients: Vec<(String, Element)>,
    pub equations: Vec<(Vec<Symbol>, Vec<Symbol>)>,
}

/// Degree of each variable, indexed like `HomSystem::variables`.
pub type DegreeProfile = Vec<usize>;

/// Monomial values of the variables, indexed like `HomSystem::variables`.
pub type MonomialAssignment = Vec<Word>;

impl HomSystem {
    /// Builds a system, checking that sides are nonempty and coefficients
    /// homogeneous.
    pub fn new(
        alphabet: usize,
        variables: Vec<Variable>,
        coefficients: Vec<(String, Element)>,
        equations: Vec<(Vec<Symbol>, Vec<Symbol>)>,
    ) -> Result<Self, HomsysError> {
        for (name, c) in &coefficients {
            if !c.is_homogeneous() || c.is_zero() {
                return Err(HomsysError::NonHomogeneousCoefficient(name.clone()));
            }
            if c.alphabet() != alphabet {
                return Err(AlgebraError::AlphabetMismatch {
                    left: alphabet,
                    right: c.alphabet(),
                }
                .into());
            }
        }
        for (i, (l, r)) in equations.iter().enumerate() {
            if l.is_empty() || r.is_empty() {
                return Err(HomsysError::Parse {
                    line: 0,
                    column: 0,
                    message: format!("equation {} has an empty side", i + 1),
                });
            }
        }
        Ok(HomSystem {
            alphabet,
            variables,
            coefficients,
            equations,
        })
    }

    pub fn parse(text: &str, alphabet: Option<usize>) -> Result<Self, HomsysError> {
        parse::parse_system(text, alphabet)
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    fn template(&self, side: &[Symbol]) -> Vec<Slot> {
        side.iter()
            .map(|s| match s {
                Symbol::Var(i) => Slot::Var(*i),
                Symbol::Coef(c) => Slot::Coef(self.coefficients[*c].1.clone()),
            })
            .collect()
    }

    /// Total degree of a side under `profile`.
    pub fn side_degree(&self, side: &[Symbol], profile: &[usize]) -> usize {
        side.iter()
            .map(|s| match s {
                Symbol::Var(i) => profile[*i],
                Symbol::Coef(c) => self.coefficients[*c].1.deg().unwrap_or(0),
            })
            .sum()
    }

    /// Checks that `profile` assigns every variable a positive degree and
    /// balances every equation.
    pub fn check_profile(&self, profile: &[usize]) -> Result<(), HomsysError> {
        if profile.len() != self.variables.len() || profile.contains(&0) {
            return Err(HomsysError::InvalidProfile(self.variables.len()));
        }
        for (i, (l, r)) in self.equations.iter().enumerate() {
            let (dl, dr) = (self.side_degree(l, profile), self.side_degree(r, profile));
            if dl != dr {
                return Err(HomsysError::UnbalancedProfile {
                    equation: i + 1,
                    left: dl,
                    right: dr,
                });
            }
        }
        Ok(())
    }

    /// Substitutes `assignment` and compares the sides of every equation.
    pub fn check_solution(
        &self,
        assignment: &HashMap<usize, Element>,
    ) -> Result<bool, HomsysError> {
        for (i, v) in self.variables.iter().enumerate() {
            match assignment.get(&i) {
                None => return Err(HomsysError::Unassigned(v.name.clone())),
                Some(e) if !e.is_homogeneous() => {
                    return Err(HomsysError::NonHomogeneousValue(v.name.clone()))
                }
                Some(_) => {}
            }
        }
        for (l, r) in &self.equations {
            let lv = substitute(&self.template(l), assignment, self.alphabet)?;
            let rv = substitute(&self.template(r), assignment, self.alphabet)?;
            if lv != rv {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `check_solution` for monomial values.
    pub fn check_monomial_solution(&self, values: &[Word]) -> Result<bool, HomsysError> {
        let assignment = values
            .iter()
            .enumerate()
            .map(|(i, w)| Ok((i, Element::monomial(w.clone(), self.alphabet)?)))
            .collect::<Result<HashMap<_, _>, AlgebraError>>()?;
        self.check_solution(&assignment)
    }
}
