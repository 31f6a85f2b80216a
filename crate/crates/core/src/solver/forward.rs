//! Symbolic check that every solution of `s x = x t` solves an equation.
//!
//! `u_1 x u_2 ... x u_n` is linear in the tensor `u_1 ⊗ u_2 ⊗ ... ⊗ u_n`,
//! and on solutions of `s x = x t` the tuples `(.., P s, Q, ..)` and
//! `(.., P, t Q, ..)` evaluate to the same element. Every element splits
//! uniquely as `r + q s` where no term of `r` ends in the leading monomial
//! `s0` of `s`, so each tuple can be rewritten slot by slot until no
//! slot except the last holds a word ending in `s0`. If the difference of
//! the two sides rewrites to zero the equation holds on every solution.

use std::collections::BTreeSet;

use super::SolverError;
use crate::algebra::{Element, Word};
use crate::equation::MonomialEquation;

fn toggle<T: Ord>(set: &mut BTreeSet<T>, item: T) {
    if !set.remove(&item) {
        set.insert(item);
    }
}

fn expand(coeffs: &[Element], out: &mut BTreeSet<Vec<Word>>) {
    let mut tuples: Vec<Vec<Word>> = vec![Vec::new()];
    for c in coeffs {
        let mut next = Vec::with_capacity(tuples.len() * c.len());
        for tuple in &tuples {
            for w in c.terms() {
                let mut t = tuple.clone();
                t.push(w.clone());
                next.push(t);
            }
        }
        tuples = next;
    }
    for t in tuples {
        toggle(out, t);
    }
}

/// Normal form of `lhs - rhs`; empty exactly when the rewriting cancels.
pub fn forward_residue(
    eq: &MonomialEquation,
    s: &Element,
    t: &Element,
) -> Result<Vec<Vec<Word>>, SolverError> {
    let s0 = match s.leading_monomial() {
        Some(w) if !w.is_empty() => w.clone(),
        _ => return Err(SolverError::ScalarInput(s.to_string())),
    };
    let tail: Vec<Word> = s.terms().iter().filter(|w| **w != s0).cloned().collect();
    let n = eq.n();
    let mut current = BTreeSet::new();
    expand(eq.u(), &mut current);
    expand(eq.v(), &mut current);

    for i in 0..n - 1 {
        let mut work: BTreeSet<(Word, Vec<Word>)> = current
            .into_iter()
            .map(|tuple| (tuple[i].clone(), tuple))
            .collect();
        let mut done = BTreeSet::new();
        while let Some((w, tuple)) = work.pop_last() {
            let Some(head) = w.strip_suffix(&s0) else {
                toggle(&mut done, tuple);
                continue;
            };
            for tt in t.terms() {
                let mut next = tuple.clone();
                next[i] = head.clone();
                next[i + 1] = tt.concat(&tuple[i + 1]);
                toggle(&mut work, (head.clone(), next));
            }
            for m in &tail {
                let mut next = tuple.clone();
                let word = head.concat(m);
                next[i] = word.clone();
                toggle(&mut work, (word, next));
            }
        }
        current = done;
    }
    Ok(current.into_iter().collect())
}

pub fn forward_reduces(
    eq: &MonomialEquation,
    s: &Element,
    t: &Element,
) -> Result<bool, SolverError> {
    Ok(forward_residue(eq, s, t)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Element {
        Element::parse(s, 2).unwrap()
    }

    #[test]
    fn two_block_quotients_cancel() {
        // u1 = v1 s, v2 = t u2
        let eq = MonomialEquation::parse("cab;c", "c;bac", 3).unwrap();
        let s = Element::parse("ab", 3).unwrap();
        let t = Element::parse("ba", 3).unwrap();
        assert!(forward_reduces(&eq, &s, &t).unwrap());
        assert!(!forward_reduces(&eq, &s, &s).unwrap());
    }

    #[test]
    fn factored_three_block_cancels() {
        let (s, t) = (e("ab"), e("ba"));
        let (mu1, tau2, mu2, mu3) = (e("b"), e("b"), e("b"), e("b"));
        assert_eq!(&t * &mu2, &tau2 * &s);
        let u = vec![&mu1 * &s.plus_one(), &tau2 * &s.plus_one(), &t * &mu3];
        let v = vec![&mu1 * &s, &t.plus_one() * &mu2, &t.plus_one() * &mu3];
        let eq = MonomialEquation::new(u, v).unwrap();
        assert!(forward_reduces(&eq, &s, &t).unwrap());
        assert!(forward_reduces(&eq, &s.plus_one(), &t.plus_one()).unwrap());
        assert!(!forward_reduces(&eq, &s, &s).unwrap());
    }

    #[test]
    fn agrees_with_sampling() {
        // x = a solves ab x = x ba
        let eq = MonomialEquation::parse("bab+b;bab+b;bab", "bab;bab+b;bab+b", 2).unwrap();
        let (s, t) = (e("ab"), e("ba"));
        assert!(forward_reduces(&eq, &s, &t).unwrap());
        for x in ["a", "aba", "ababa + a"] {
            let x = e(x);
            assert_eq!(&s * &x, &x * &t);
            assert!(eq.is_solution(&x));
        }
    }

    #[test]
    fn scalar_s_is_rejected() {
        let eq = MonomialEquation::parse("a;1", "1;a", 2).unwrap();
        assert!(forward_residue(&eq, &e("1"), &e("1")).is_err());
    }
}
