use std::collections::HashMap;

use super::{AlgebraError, Element};

/// One factor of a product template: a variable or a fixed coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slot {
    Var(usize),
    Coef(Element),
}

/// Product of the slot values in order.
pub fn substitute(
    template: &[Slot],
    assignment: &HashMap<usize, Element>,
    alphabet: usize,
) -> Result<Element, AlgebraError> {
    let mut acc = Element::one(alphabet);
    for slot in template {
        let value = match slot {
            Slot::Var(i) => assignment
                .get(i)
                .ok_or(AlgebraError::UnassignedVariable(*i))?,
            Slot::Coef(c) => c,
        };
        acc = acc.try_mul(value)?;
    }
    Ok(acc)
}
