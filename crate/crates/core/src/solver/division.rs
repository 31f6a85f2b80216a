use crate::algebra::{Element, Word};

/// The `q` with `a = b · q`, if it exists.
///
/// Uses leading-monomial division: the leading monomial of the remainder
/// must start with the leading monomial of `b`. The quotient is unique since
/// the algebra has no zero divisors.
pub fn left_divide(a: &Element, b: &Element) -> Option<Element> {
    divide(a, b, true)
}

/// The `q` with `a = q · b`, if it exists.
pub fn right_divide(a: &Element, b: &Element) -> Option<Element> {
    divide(a, b, false)
}

fn divide(a: &Element, b: &Element, left: bool) -> Option<Element> {
    if a.alphabet() != b.alphabet() {
        return None;
    }
    let lead = b.leading_monomial()?.clone();
    let one = Word::one();
    let mut rem = a.clone();
    let mut quotient = Vec::new();
    while let Some(l) = rem.leading_monomial() {
        let w = if left {
            l.strip_prefix(&lead)?
        } else {
            l.strip_suffix(&lead)?
        };
        rem += &if left {
            b.sandwich(&one, &w)
        } else {
            b.sandwich(&w, &one)
        };
        quotient.push(w);
    }
    Some(Element::from_unsorted(quotient, a.alphabet()))
}
