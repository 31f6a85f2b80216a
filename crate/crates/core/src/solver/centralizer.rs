use super::{gate, SolutionFamily, SolverError};
use crate::algebra::Element;
use crate::gf2::{kernel_bounded, LinearXEquation, OracleLimits};

#[derive(Clone, Debug)]
pub struct CentralizerResult {
    /// Generator `v` of the centralizer, without constant term.
    pub root: Element,
    /// Coefficients of `p` with `u = p(root)`.
    pub polynomial: Vec<bool>,
    /// `{ p(root) }`.
    pub family: SolutionFamily,
    pub degree_bound: usize,
    pub kernel_dimension: usize,
}

/// Computes the centralizer of `u` among elements of degree at most
/// `degree` and checks that it is the algebra generated by one element.
pub fn centralizer(
    u: &Element,
    degree: usize,
    limits: &OracleLimits,
) -> Result<CentralizerResult, SolverError> {
    gate("u", u, false)?;
    let du = u.deg().unwrap_or(0);
    if du == 0 {
        return Err(SolverError::ScalarInput(u.to_string()));
    }
    if degree < du {
        return Err(SolverError::BoundTooSmall {
            bound: degree,
            degree: du,
        });
    }
    let k = u.alphabet();
    let kernel = kernel_bounded(&LinearXEquation::conjugation(u, u), degree, limits)?;
    let span = kernel.span(k);
    let root = span
        .basis()
        .into_iter()
        .find(|b| b.deg().is_some_and(|d| d > 0))
        .map(|b| if b.constant_term() { b.plus_one() } else { b })
        .ok_or_else(|| {
            SolverError::Falsified(format!("{u} is missing from its own centralizer"))
        })?;
    let polynomial = u.as_polynomial_in(&root).ok_or_else(|| {
        SolverError::Falsified(format!(
            "{u} is not a polynomial in the minimal element {root}"
        ))
    })?;
    let family = SolutionFamily::Conjugation {
        generators: vec![Element::one(k)],
        modulus: root.clone(),
    };
    let expected = family.span_up_to(degree).expect("conjugation family");
    if !expected.same_as(&span) {
        return Err(SolverError::Falsified(format!(
            "centralizer of {u} at degree {degree} has dimension {}, powers of {root} span {}",
            span.dimension(),
            expected.dimension()
        )));
    }
    Ok(CentralizerResult {
        root,
        polynomial,
        family,
        degree_bound: degree,
        kernel_dimension: span.dimension(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str, k: usize) -> Element {
        Element::parse(s, k).unwrap()
    }

    #[test]
    fn spec_examples() {
        let lim = OracleLimits::default();
        let r = centralizer(&e("a", 2), 5, &lim).unwrap();
        assert_eq!(r.root, e("a", 2));
        assert_eq!(r.kernel_dimension, 6);

        let r = centralizer(&e("aba", 2), 9, &lim).unwrap();
        assert_eq!(r.root, e("aba", 2));
        assert_eq!(r.kernel_dimension, 4);

        let r = centralizer(&e("abab + ab", 2), 8, &lim).unwrap();
        assert_eq!(r.root, e("ab", 2));
        assert_eq!(r.polynomial, vec![false, true, true]);
        assert_eq!(r.kernel_dimension, 5);
    }

    #[test]
    fn rejects_bad_input() {
        let lim = OracleLimits::default();
        assert!(matches!(
            centralizer(&e("1", 2), 3, &lim),
            Err(SolverError::ScalarInput(_))
        ));
        assert!(matches!(
            centralizer(&e("ab + ba", 2), 3, &lim),
            Err(SolverError::Gate { .. })
        ));
        assert!(matches!(
            centralizer(&e("abc", 3), 2, &lim),
            Err(SolverError::BoundTooSmall { .. })
        ));
    }
}
