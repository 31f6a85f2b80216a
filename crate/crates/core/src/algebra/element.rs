use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use super::{AlgebraError, Word};

/// Degree of an element. The zero element has degree [`Degree::NegInfinity`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// An element of the free associative algebra over GF(2) on `alphabet` generators.
///
/// Stored as the sorted set of words with coefficient 1; the largest word
/// in degree-lexicographic order is the leading monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    terms: Vec<Word>,
    alphabet: usize,
}

impl Element {
    pub fn zero(alphabet: usize) -> Self {
        Element {
            terms: Vec::new(),
            alphabet,
        }
    }

    pub fn one(alphabet: usize) -> Self {
        Element {
            terms: vec![Word::one()],
            alphabet,
        }
    }

    /// Generator `a_g` (0-based).
    pub fn generator(g: u8, alphabet: usize) -> Result<Self, AlgebraError> {
        Self::monomial(Word::letter(g), alphabet)
    }

    pub fn monomial(word: Word, alphabet: usize) -> Result<Self, AlgebraError> {
        check_word(&word, alphabet)?;
        Ok(Element {
            terms: vec![word],
            alphabet,
        })
    }

    /// Sums the given words over GF(2): repeated words cancel in pairs.
    pub fn from_words<I>(words: I, alphabet: usize) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = Word>,
    {
        let words: Vec<Word> = words.into_iter().collect();
        for w in &words {
            check_word(w, alphabet)?;
        }
        Ok(Self::from_unsorted(words, alphabet))
    }

    /// Caller guarantees every letter is below `alphabet`.
    pub(crate) fn from_unsorted(mut words: Vec<Word>, alphabet: usize) -> Self {
        words.sort_unstable();
        let mut terms: Vec<Word> = Vec::with_capacity(words.len());
        for w in words {
            if terms.last() == Some(&w) {
                terms.pop();
            } else {
                terms.push(w);
            }
        }
        Element { terms, alphabet }
    }

    /// Caller guarantees `terms` is strictly increasing.
    pub(crate) fn from_sorted(terms: Vec<Word>, alphabet: usize) -> Self {
        debug_assert!(terms.windows(2).all(|p| p[0] < p[1]));
        Element { terms, alphabet }
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    /// Same element viewed over a larger alphabet.
    pub fn widen(&self, alphabet: usize) -> Result<Self, AlgebraError> {
        if alphabet < self.min_alphabet() {
            return Err(AlgebraError::AlphabetMismatch {
                left: self.alphabet,
                right: alphabet,
            });
        }
        Ok(Element {
            terms: self.terms.clone(),
            alphabet,
        })
    }

    /// Smallest alphabet size that can hold every letter used.
    pub fn min_alphabet(&self) -> usize {
        self.terms.iter().map(Word::min_alphabet).max().unwrap_or(0)
    }

    /// Terms in increasing degree-lexicographic order.
    pub fn terms(&self) -> &[Word] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_empty()
    }

    /// True for `0` and `1`.
    pub fn is_scalar(&self) -> bool {
        self.terms.iter().all(Word::is_empty)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.terms.binary_search(w).is_ok()
    }

    pub fn degree(&self) -> Degree {
        match self.terms.last() {
            None => Degree::NegInfinity,
            Some(w) => Degree::Finite(w.len()),
        }
    }

    /// Degree as an option, `None` for zero.
    pub fn deg(&self) -> Option<usize> {
        self.degree().finite()
    }

    pub fn leading_monomial(&self) -> Option<&Word> {
        self.terms.last()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(f) => self.terms.iter().all(|w| w.len() == f.len()),
        }
    }

    pub fn homogeneous_component(&self, m: usize) -> Element {
        let terms = self
            .terms
            .iter()
            .filter(|w| w.len() == m)
            .cloned()
            .collect();
        Element::from_sorted(terms, self.alphabet)
    }

    /// Terms of degree at least `m`.
    pub fn terms_from_degree(&self, m: usize) -> Element {
        let start = self.terms.partition_point(|w| w.len() < m);
        Element::from_sorted(self.terms[start..].to_vec(), self.alphabet)
    }

    /// Terms of degree at most `m`.
    pub fn terms_up_to_degree(&self, m: usize) -> Element {
        let end = self.terms.partition_point(|w| w.len() <= m);
        Element::from_sorted(self.terms[..end].to_vec(), self.alphabet)
    }

    pub fn top_homogeneous(&self) -> Result<Element, AlgebraError> {
        match self.deg() {
            None => Err(AlgebraError::ZeroElement("top_homogeneous")),
            Some(d) => Ok(self.homogeneous_component(d)),
        }
    }

    /// The top homogeneous part when it is a single monomial.
    pub fn top_monomial(&self) -> Option<&Word> {
        let d = self.deg()?;
        let n = self.terms.len();
        if n >= 2 && self.terms[n - 2].len() == d {
            None
        } else {
            self.terms.last()
        }
    }

    pub fn constant_term(&self) -> bool {
        self.terms.first().map(Word::is_empty).unwrap_or(false)
    }

    /// `self + 1`.
    pub fn plus_one(&self) -> Element {
        self + &Element::one(self.alphabet)
    }

    fn check_same(&self, other: &Element) -> Result<(), AlgebraError> {
        if self.alphabet != other.alphabet {
            Err(AlgebraError::AlphabetMismatch {
                left: self.alphabet,
                right: other.alphabet,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_same(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_same(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Element) -> Element {
        // merge of two sorted lists, dropping common words
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Element::from_sorted(out, self.alphabet)
    }

    fn mul_unchecked(&self, other: &Element) -> Element {
        if self.is_zero() || other.is_zero() {
            return Element::zero(self.alphabet);
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        let mut words = Vec::with_capacity(self.len() * other.len());
        for x in &self.terms {
            for y in &other.terms {
                words.push(x.concat(y));
            }
        }
        Element::from_unsorted(words, self.alphabet)
    }

    /// Multiplies by a single word on the left and right: `a · self · b`.
    pub fn sandwich(&self, a: &Word, b: &Word) -> Element {
        let terms = self.terms.iter().map(|w| w.sandwich(a, b)).collect();
        // left/right multiplication by a fixed word is monotone for deglex
        Element::from_sorted(terms, self.alphabet)
    }

    pub fn power(&self, n: usize) -> Element {
        let mut acc = Element::one(self.alphabet);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates `sum_j coeffs[j] * v^j` over GF(2).
    pub fn poly_eval(coeffs: &[bool], v: &Element) -> Element {
        // Horner
        let mut acc = Element::zero(v.alphabet);
        for &c in coeffs.iter().rev() {
            acc = &acc * v;
            if c {
                acc = acc.plus_one();
            }
        }
        acc
    }

    /// Writes `self = p(v)` when possible, returning the coefficients of `p`.
    ///
    /// Works by repeatedly cancelling the leading monomial against a power of
    /// `v`; requires `v` to have a monomial top of positive degree.
    pub fn as_polynomial_in(&self, v: &Element) -> Option<Vec<bool>> {
        let v_top = v.top_monomial()?;
        if v_top.is_empty() || self.alphabet != v.alphabet {
            return None;
        }
        let dv = v_top.len();
        let mut rem = self.clone();
        let mut coeffs: Vec<bool> = Vec::new();
        let mut powers: BTreeMap<usize, Element> = BTreeMap::new();
        while let Some(lead) = rem.leading_monomial() {
            if lead.len() % dv != 0 {
                return None;
            }
            let j = lead.len() / dv;
            if *lead != v_top.pow(j) {
                return None;
            }
            let vj = powers.entry(j).or_insert_with(|| v.power(j)).clone();
            rem = &rem + &vj;
            if coeffs.len() <= j {
                coeffs.resize(j + 1, false);
            }
            coeffs[j] ^= true;
        }
        Some(coeffs)
    }

    /// Image in `G^m / G^(m-c)` with `m = deg(self)`: keeps the terms of
    /// degree greater than `m - c`.
    pub fn truncate_window(&self, width: usize) -> Result<CodegreeWindow, AlgebraError> {
        let top = self
            .deg()
            .ok_or(AlgebraError::ZeroElement("truncate_window"))?;
        if width == 0 {
            return Err(AlgebraError::InvalidWindow);
        }
        let floor = (top + 1).saturating_sub(width);
        Ok(CodegreeWindow {
            retained: self.terms_from_degree(floor),
            top_degree: top,
            width,
        })
    }

    /// Parses an element in the text grammar over `alphabet` generators.
    pub fn parse(text: &str, alphabet: usize) -> Result<Element, AlgebraError> {
        let e = super::parse::parse_element(text, 1, 1)?;
        e.widen_checked(alphabet)
    }

    /// Parses and sets the alphabet to the smallest one holding every letter (at least 1).
    pub fn parse_infer(text: &str) -> Result<Element, AlgebraError> {
        let e = super::parse::parse_element(text, 1, 1)?;
        let k = e.min_alphabet().max(1);
        e.widen_checked(k)
    }

    pub(crate) fn widen_checked(mut self, alphabet: usize) -> Result<Element, AlgebraError> {
        for w in &self.terms {
            check_word(w, alphabet)?;
        }
        self.alphabet = alphabet;
        Ok(self)
    }
}

fn check_word(w: &Word, alphabet: usize) -> Result<(), AlgebraError> {
    match w.letters().iter().find(|&&g| g as usize >= alphabet) {
        Some(&g) => Err(AlgebraError::LetterOutOfRange {
            letter: g,
            alphabet,
        }),
        None => Ok(()),
    }
}

/// Panics when the alphabets differ; use [`Element::try_add`] for a checked sum.
impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &'a Element) -> Element {
        self.try_add(rhs).expect("alphabet mismatch in addition")
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        *self = &*self + rhs;
    }
}

/// Panics when the alphabets differ; use [`Element::try_mul`] for a checked product.
impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    fn mul(self, rhs: &'a Element) -> Element {
        self.try_mul(rhs)
            .expect("alphabet mismatch in multiplication")
    }
}

/// Compares leading monomials first, then the next terms down; zero is smallest.
impl Ord for Element {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.terms
            .iter()
            .rev()
            .cmp(other.terms.iter().rev())
            .then(self.alphabet.cmp(&other.alphabet))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, w) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self}; k={})", self.alphabet)
    }
}

/// The image of an element in `G^m / G^(m-c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodegreeWindow {
    retained: Element,
    top_degree: usize,
    width: usize,
}

impl CodegreeWindow {
    pub fn retained(&self) -> &Element {
        &self.retained
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Window of a product computed from the windows of the factors.
    ///
    /// Terms below the window of either factor only reach degrees below the
    /// product's window, so the result equals `truncate_window(e1 * e2, c)`
    /// for equal widths.
    pub fn mul(&self, other: &CodegreeWindow) -> CodegreeWindow {
        let width = self.width.min(other.width);
        let top = self.top_degree + other.top_degree;
        let floor = (top + 1).saturating_sub(width);
        let prod = &self.retained * &other.retained;
        CodegreeWindow {
            retained: prod.terms_from_degree(floor),
            top_degree: top,
            width,
        }
    }
}
