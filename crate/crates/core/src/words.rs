//! Combinatorics on words: primitive roots, squares, overlaps and shift profiles.

use crate::algebra::Word;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordsError {
    #[error("the empty word has no primitive root")]
    EmptyWord,
    #[error("no factorization: {0}")]
    NoFactorization(String),
    #[error("degree imbalance: left side {left} vs right side {right}")]
    DegreeImbalance { left: usize, right: usize },
    #[error("coefficient sequences must have equal length ({0} vs {1})")]
    LengthMismatch(usize, usize),
}

/// `word = root^exponent` with `root` primitive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDecomposition {
    pub root: Word,
    pub exponent: usize,
}

pub fn primitive_root(w: &Word) -> Result<RootDecomposition, WordsError> {
    let n = w.len();
    if n == 0 {
        return Err(WordsError::EmptyWord);
    }
    let letters = w.letters();
    for p in (1..=n).filter(|p| n % p == 0) {
        if (p..n).all(|i| letters[i] == letters[i - p]) {
            return Ok(RootDecomposition {
                root: w.slice(0, p),
                exponent: n / p,
            });
        }
    }
    unreachable!("p = n always succeeds")
}

pub fn is_primitive(w: &Word) -> bool {
    primitive_root(w).map(|r| r.exponent == 1).unwrap_or(false)
}

/// True iff no factor of the form `αα` with `α` nonempty occurs in `w`.
pub fn is_square_free(w: &Word) -> bool {
    find_square(w).is_none()
}

/// First square factor found, as `(start, half_length)`.
pub fn find_square(w: &Word) -> Option<(usize, usize)> {
    let s = w.letters();
    let n = s.len();
    for start in 0..n {
        for half in 1..=(n - start) / 2 {
            if s[start..start + half] == s[start + half..start + 2 * half] {
                return Some((start, half));
            }
        }
    }
    None
}

/// Every square factor of `w` as `(start, half_length)`.
pub fn squares(w: &Word) -> Vec<(usize, usize)> {
    let s = w.letters();
    let n = s.len();
    let mut out = Vec::new();
    for start in 0..n {
        for half in 1..=(n - start) / 2 {
            if s[start..start + half] == s[start + half..start + 2 * half] {
                out.push((start, half));
            }
        }
    }
    out
}

/// Least `p >= 1` with `w[i] = w[i + p]` wherever both exist; `|w|` when
/// no shorter period exists (and 0 for the empty word).
pub fn smallest_period(w: &Word) -> usize {
    let s = w.letters();
    (1..=s.len())
        .find(|&p| (p..s.len()).all(|i| s[i] == s[i - p]))
        .unwrap_or(0)
}

/// All `L >= 1` with `suffix(w1, L) == prefix(w2, L)`, increasing.
pub fn overlap_suffix_prefix(w1: &Word, w2: &Word) -> Vec<usize> {
    let a = w1.letters();
    let b = w2.letters();
    (1..=a.len().min(b.len()))
        .filter(|&l| a[a.len() - l..] == b[..l])
        .collect()
}

/// Factorization of a top monomial `x0 = f0 · t0^b = s0^b · e0` with
/// `|s0| = |t0|` and `|e0| = |f0| < |s0|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopFactorization {
    pub s0: Word,
    pub t0: Word,
    pub e0: Word,
    pub f0: Word,
    pub b: usize,
}

impl TopFactorization {
    pub fn holds_for(&self, x0: &Word) -> bool {
        self.s0.len() == self.t0.len()
            && self.e0.len() == self.f0.len()
            && self.e0.len() < self.s0.len()
            && self.f0.concat(&self.t0.pow(self.b)) == *x0
            && self.s0.pow(self.b).concat(&self.e0) == *x0
    }
}

/// Factorizes `x0` given the monomial identity `u0 · x0 = x0 · v0`, where
/// `d = |u0| = |v0|` is the shift between the two copies of `x0`.
pub fn top_factorization(
    u0: &Word,
    v0: &Word,
    x0: &Word,
    d: usize,
) -> Result<TopFactorization, WordsError> {
    if d == 0 || u0.len() != d || v0.len() != d {
        return Err(WordsError::NoFactorization(format!(
            "shift {d} must equal |u0| = {} and |v0| = {}",
            u0.len(),
            v0.len()
        )));
    }
    if u0.concat(x0) != x0.concat(v0) {
        return Err(WordsError::NoFactorization(format!(
            "{u0}·{x0} differs from {x0}·{v0}"
        )));
    }
    let b = x0.len() / d;
    let r = x0.len() % d;
    let fac = TopFactorization {
        s0: u0.clone(),
        t0: v0.clone(),
        e0: x0.slice(x0.len() - r, x0.len()),
        f0: x0.slice(0, r),
        b,
    };
    debug_assert!(fac.holds_for(x0));
    Ok(fac)
}

/// Offsets between corresponding appearances of `x` on the two sides of
/// `u_1 x u_2 ... x u_n = v_1 x v_2 ... x v_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftProfile {
    /// For appearance `j` (1-based, `1..n-1`): `deg(u_1...u_j) - deg(v_1...v_j)`.
    pub offsets: Vec<i64>,
    /// Minimal positive `|offset|`, absent when no appearance is shifted.
    pub min_shift: Option<usize>,
    /// Appearances with a nonzero offset (1-based).
    pub shifted: Vec<usize>,
    /// Appearances with zero offset (1-based).
    pub unshifted: Vec<usize>,
}

impl ShiftProfile {
    pub fn shift(&self, appearance: usize) -> usize {
        self.offsets[appearance - 1].unsigned_abs() as usize
    }
}

pub fn shift_profile(
    u_degrees: &[usize],
    v_degrees: &[usize],
    x_degree: usize,
) -> Result<ShiftProfile, WordsError> {
    if u_degrees.len() != v_degrees.len() {
        return Err(WordsError::LengthMismatch(u_degrees.len(), v_degrees.len()));
    }
    let n = u_degrees.len();
    let appearances = n.saturating_sub(1);
    let left: usize = u_degrees.iter().sum::<usize>() + appearances * x_degree;
    let right: usize = v_degrees.iter().sum::<usize>() + appearances * x_degree;
    if left != right {
        return Err(WordsError::DegreeImbalance { left, right });
    }
    let mut offsets = Vec::with_capacity(appearances);
    let (mut pu, mut pv) = (0i64, 0i64);
    for j in 0..appearances {
        pu += u_degrees[j] as i64;
        pv += v_degrees[j] as i64;
        offsets.push(pu - pv);
    }
    let shifted: Vec<usize> = (1..=appearances).filter(|&j| offsets[j - 1] != 0).collect();
    let unshifted: Vec<usize> = (1..=appearances).filter(|&j| offsets[j - 1] == 0).collect();
    let min_shift = offsets
        .iter()
        .filter(|o| **o != 0)
        .map(|o| o.unsigned_abs() as usize)
        .min();
    Ok(ShiftProfile {
        offsets,
        min_shift,
        shifted,
        unshifted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    /// O(n^3) square search used as an oracle.
    fn brute_square_free(s: &[u8]) -> bool {
        for i in 0..s.len() {
            for j in i + 1..=s.len() {
                let f = &s[i..j];
                if f.len() % 2 == 0 && f[..f.len() / 2] == f[f.len() / 2..] {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(
            primitive_root(&w("abab")).unwrap(),
            RootDecomposition {
                root: w("ab"),
                exponent: 2
            }
        );
        assert_eq!(primitive_root(&w("aba")).unwrap().exponent, 1);
        assert_eq!(
            primitive_root(&w("aaaa")).unwrap(),
            RootDecomposition {
                root: w("a"),
                exponent: 4
            }
        );
        assert_eq!(primitive_root(&Word::one()), Err(WordsError::EmptyWord));
    }

    #[test]
    fn square_freeness() {
        assert!(brute_square_free(w("abacab").letters()));
        assert!(is_square_free(&w("abacab")));
        assert!(!is_square_free(&w("abab")));
        assert!(!is_square_free(&w("aa")));
        assert!(is_square_free(&Word::one()));
    }

    #[test]
    fn square_freeness_matches_brute_force_exhaustively() {
        for k in [2usize, 3] {
            let max_len = if k == 2 { 12 } else { 9 };
            for len in 0..=max_len {
                for word in Word::all_of_length(k, len) {
                    assert_eq!(
                        is_square_free(&word),
                        brute_square_free(word.letters()),
                        "{word}"
                    );
                }
            }
        }
    }

    #[test]
    fn no_long_binary_square_free_words() {
        for word in Word::all_of_length(2, 4) {
            assert!(!is_square_free(&word));
        }
    }

    #[test]
    fn periods_and_squares() {
        assert_eq!(smallest_period(&w("abaab")), 3);
        assert_eq!(smallest_period(&w("ababa")), 2);
        assert_eq!(smallest_period(&w("abc")), 3);
        assert_eq!(smallest_period(&Word::one()), 0);
        assert_eq!(squares(&w("abab")), vec![(0, 2)]);
        assert_eq!(squares(&w("aaa")), vec![(0, 1), (1, 1)]);
        assert!(squares(&w("abacab")).is_empty());
    }

    #[test]
    fn overlaps() {
        assert_eq!(overlap_suffix_prefix(&w("aba"), &w("ab")), vec![1]);
        assert_eq!(overlap_suffix_prefix(&w("ab"), &w("ab")), vec![2]);
        assert!(overlap_suffix_prefix(&w("a"), &w("b")).is_empty());
        assert_eq!(overlap_suffix_prefix(&w("aaa"), &w("aa")), vec![1, 2]);
    }

    #[test]
    fn top_factorizations() {
        assert!(top_factorization(&w("ab"), &w("ba"), &w("ab"), 2).is_err());
        let f = top_factorization(&w("ab"), &w("ba"), &w("a"), 2).unwrap();
        assert_eq!((f.s0.clone(), f.t0.clone(), f.b), (w("ab"), w("ba"), 0));
        assert!(f.holds_for(&w("a")));
        let x0 = w("abababa");
        let f = top_factorization(&w("ab"), &w("ba"), &x0, 2).unwrap();
        assert_eq!((f.f0.clone(), f.e0.clone(), f.b), (w("a"), w("a"), 3));
        assert!(f.holds_for(&x0));
        assert!(top_factorization(&w("ab"), &w("ba"), &w("a"), 1).is_err());
    }

    #[test]
    fn shift_profiles() {
        let p = shift_profile(&[3, 1], &[1, 3], 4).unwrap();
        assert_eq!(p.offsets, vec![2]);
        assert_eq!(p.min_shift, Some(2));
        assert_eq!(p.shifted, vec![1]);

        let p = shift_profile(&[2, 2, 2], &[2, 2, 2], 3).unwrap();
        assert_eq!(p.min_shift, None);
        assert_eq!(p.unshifted, vec![1, 2]);

        let p = shift_profile(&[2, 1, 1], &[1, 1, 2], 5).unwrap();
        assert_eq!(p.offsets, vec![1, 1]);
        assert_eq!(p.min_shift, Some(1));

        assert!(matches!(
            shift_profile(&[2, 1], &[1, 1], 3),
            Err(WordsError::DegreeImbalance { .. })
        ));
    }
}
