//! Exhaustive search over all elements of bounded degree for equations
//! that are not linear in `x`.
//!
//! Matrix images filter the candidates before the exact check; since the
//! images come from an algebra homomorphism the filter never drops a
//! solution.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linear::monomial_count;
use super::{LinearError, OracleLimits};
use crate::algebra::{Element, Word};
use crate::equation::MonomialEquation;

fn check_cap(
    eq: &MonomialEquation,
    degree: usize,
    limits: &OracleLimits,
) -> Result<usize, LinearError> {
    let n = monomial_count(eq.alphabet(), degree);
    let required = if n >= 127 { u128::MAX } else { 1u128 << n };
    if required > limits.candidate_cap as u128 {
        return Err(LinearError::ResourceCap {
            cap: "candidate cap",
            required,
            limit: limits.candidate_cap as u128,
        });
    }
    Ok(n as usize)
}

fn layer_element(words: &[Word], mask: u64, k: usize) -> Element {
    Element::from_sorted(
        (0..words.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| words[i].clone())
            .collect(),
        k,
    )
}

/// 32x32 matrix over GF(2), one `u32` per row.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Mat([u32; 32]);

impl Mat {
    const ZERO: Mat = Mat([0; 32]);

    fn identity() -> Mat {
        let mut m = Mat::ZERO;
        for (i, row) in m.0.iter_mut().enumerate() {
            *row = 1 << i;
        }
        m
    }

    fn mul(&self, other: &Mat) -> Mat {
        let mut out = Mat::ZERO;
        for (i, &row) in self.0.iter().enumerate() {
            let mut acc = 0;
            let mut bits = row;
            while bits != 0 {
                acc ^= other.0[bits.trailing_zeros() as usize];
                bits &= bits - 1;
            }
            out.0[i] = acc;
        }
        out
    }

    fn add_assign(&mut self, other: &Mat) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a ^= b;
        }
    }
}

/// Evaluation of elements at fixed random matrices: an algebra
/// homomorphism, so every solution maps to a solution.
struct Representation {
    letters: Vec<Mat>,
}

impl Representation {
    fn new(k: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let letters = (0..k)
            .map(|_| Mat(std::array::from_fn(|_| rng.gen())))
            .collect();
        Representation { letters }
    }

    fn word(&self, w: &Word) -> Mat {
        w.letters().iter().fold(Mat::identity(), |acc, &g| {
            acc.mul(&self.letters[g as usize])
        })
    }

    fn element(&self, e: &Element) -> Mat {
        let mut m = Mat::ZERO;
        for w in e.terms() {
            m.add_assign(&self.word(w));
        }
        m
    }

    fn residual(&self, u: &[Mat], v: &[Mat], x: &Mat) -> Mat {
        let side = |c: &[Mat]| {
            let mut acc = c[0];
            for m in &c[1..] {
                acc = acc.mul(x).mul(m);
            }
            acc
        };
        let mut r = side(u);
        r.add_assign(&side(v));
        r
    }
}

/// Every `x` with `deg(x) <= degree` solving `eq`, sorted.
///
/// All candidates are visited in Gray-code order; each is first evaluated
/// at two fixed matrix representations and checked exactly only when both
/// images solve the equation.
pub fn exhaustive_solutions(
    eq: &MonomialEquation,
    degree: usize,
    limits: &OracleLimits,
) -> Result<Vec<Element>, LinearError> {
    let n = check_cap(eq, degree, limits)?;
    let k = eq.alphabet();
    let words: Vec<Word> = (0..=degree)
        .flat_map(|m| Word::all_of_length(k, m))
        .collect();
    let reps = [Representation::new(k, 1), Representation::new(k, 2)];
    let images: Vec<(Vec<Mat>, Vec<Mat>, Vec<Mat>)> = reps
        .iter()
        .map(|r| {
            (
                eq.u().iter().map(|e| r.element(e)).collect(),
                eq.v().iter().map(|e| r.element(e)).collect(),
                words.iter().map(|w| r.word(w)).collect(),
            )
        })
        .collect();

    let mut out = Vec::new();
    let mut x = vec![Mat::ZERO; reps.len()];
    let mut mask: u64 = 0;
    for step in 0..(1u64 << n) {
        if step > 0 {
            let bit = step.trailing_zeros() as usize;
            mask ^= 1 << bit;
            for (xi, img) in x.iter_mut().zip(&images) {
                xi.add_assign(&img.2[bit]);
            }
        }
        let passes = reps
            .iter()
            .zip(&images)
            .zip(&x)
            .all(|((r, img), xi)| r.residual(&img.0, &img.1, xi) == Mat::ZERO);
        if passes {
            let candidate = layer_element(&words, mask, k);
            if eq.is_solution(&candidate) {
                out.push(candidate);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Plain enumeration of all `2^N` candidates.
pub fn exhaustive_solutions_naive(
    eq: &MonomialEquation,
    degree: usize,
    limits: &OracleLimits,
) -> Result<Vec<Element>, LinearError> {
    let n = check_cap(eq, degree, limits)?;
    let k = eq.alphabet();
    let words: Vec<Word> = (0..=degree)
        .flat_map(|m| Word::all_of_length(k, m))
        .collect();
    debug_assert_eq!(words.len(), n);
    let mut out = Vec::new();
    for mask in 0..(1u64 << n) {
        let x = layer_element(&words, mask, k);
        if eq.is_solution(&x) {
            out.push(x);
        }
    }
    out.sort();
    Ok(out)
}
