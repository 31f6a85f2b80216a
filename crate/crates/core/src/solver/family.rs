use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraError, Element};
use crate::gf2::Span;

/// A finite description of a solution set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionFamily {
    /// `{ sum_i w_i · p_i(modulus) }` over all polynomials `p_i`.
    Conjugation {
        generators: Vec<Element>,
        modulus: Element,
    },
    /// The solutions of `s x = x t`, together with solutions below
    /// `threshold` that are not of that form.
    Reduction {
        s: Element,
        t: Element,
        threshold: u64,
        short_solutions: Vec<Element>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum FamilyJson {
    Conjugation {
        generators: Vec<String>,
        modulus: String,
    },
    Reduction {
        s: String,
        t: String,
        threshold: u64,
        short_solutions: Vec<String>,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum FamilyParseError {
    #[error("invalid family JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid element in family: {0}")]
    Element(#[from] AlgebraError),
}

impl SolutionFamily {
    pub fn alphabet(&self) -> usize {
        match self {
            SolutionFamily::Conjugation { modulus, .. } => modulus.alphabet(),
            SolutionFamily::Reduction { s, .. } => s.alphabet(),
        }
    }

    /// Basis of the family members of degree at most `degree` (conjugation
    /// families only): all `w_i · v^j` that fit.
    pub fn span_up_to(&self, degree: usize) -> Option<Span> {
        let SolutionFamily::Conjugation {
            generators,
            modulus,
        } = self
        else {
            return None;
        };
        let mut span = Span::new(modulus.alphabet());
        let dv = modulus.deg().unwrap_or(0);
        for w in generators {
            let Some(dw) = w.deg() else { continue };
            let mut term = w.clone();
            let mut d = dw;
            while d <= degree {
                span.insert(&term);
                if dv == 0 {
                    break;
                }
                term = &term * modulus;
                d += dv;
            }
        }
        Some(span)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let strs = |v: &[Element]| v.iter().map(|e| e.to_string()).collect();
        let json = match self {
            SolutionFamily::Conjugation {
                generators,
                modulus,
            } => FamilyJson::Conjugation {
                generators: strs(generators),
                modulus: modulus.to_string(),
            },
            SolutionFamily::Reduction {
                s,
                t,
                threshold,
                short_solutions,
            } => FamilyJson::Reduction {
                s: s.to_string(),
                t: t.to_string(),
                threshold: *threshold,
                short_solutions: strs(short_solutions),
            },
        };
        serde_json::to_value(json).expect("family serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("family serializes")
    }

    /// Parses the JSON form over `alphabet` generators.
    pub fn from_json(text: &str, alphabet: usize) -> Result<Self, FamilyParseError> {
        let json: FamilyJson = serde_json::from_str(text)?;
        let p = |s: &str| Element::parse(s, alphabet);
        let list = |v: &[String]| v.iter().map(|s| p(s)).collect::<Result<Vec<_>, _>>();
        Ok(match json {
            FamilyJson::Conjugation {
                generators,
                modulus,
            } => SolutionFamily::Conjugation {
                generators: list(&generators)?,
                modulus: p(&modulus)?,
            },
            FamilyJson::Reduction {
                s,
                t,
                threshold,
                short_solutions,
            } => SolutionFamily::Reduction {
                s: p(&s)?,
                t: p(&t)?,
                threshold,
                short_solutions: list(&short_solutions)?,
            },
        })
    }
}
