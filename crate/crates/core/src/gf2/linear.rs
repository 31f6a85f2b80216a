//! Bounded-degree solving of equations linear in `x`:
//! `sum_j A_j · x · B_j = rhs` with `deg(x) <= D`.
//!
//! The unknowns are the coefficients of `x` on all words of degree at most
//! `D`. Instead of one large matrix the system is eliminated degree by
//! degree from the top: the output component of degree `m + G`
//! (`G = max deg A_j + deg B_j`) sees the degree-`m` part of `x` only
//! through the top-degree terms of the coefficients, and sees lower parts
//! of `x` not at all. Each layer is a sparse map whose connected components
//! are eliminated separately; partial solutions carried from higher layers
//! are corrected or combined so their residual vanishes layer by layer.

use std::collections::HashMap;

use super::dense::{BitVec, Echelon};
use super::span::{linear_dependencies, Span};
use super::{LinearError, OracleLimits};
use crate::algebra::{Element, Word};

/// `sum_j A_j · x · B_j = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearXEquation {
    pub summands: Vec<(Element, Element)>,
    pub rhs: Element,
}

impl LinearXEquation {
    pub fn new(summands: Vec<(Element, Element)>, rhs: Element) -> Result<Self, LinearError> {
        let k = rhs.alphabet();
        for (a, b) in &summands {
            if a.alphabet() != k || b.alphabet() != k {
                return Err(LinearError::Algebra(
                    crate::algebra::AlgebraError::AlphabetMismatch {
                        left: k,
                        right: if a.alphabet() != k {
                            a.alphabet()
                        } else {
                            b.alphabet()
                        },
                    },
                ));
            }
        }
        Ok(LinearXEquation { summands, rhs })
    }

    /// Right-hand side zero; the alphabet is taken from the first summand.
    pub fn homogeneous(summands: Vec<(Element, Element)>) -> Self {
        let k = summands.first().map(|(a, _)| a.alphabet()).unwrap_or(1);
        LinearXEquation {
            summands,
            rhs: Element::zero(k),
        }
    }

    /// `u · x + x · v = 0`, i.e. `ux = xv`.
    pub fn conjugation(u: &Element, v: &Element) -> Self {
        let one = Element::one(u.alphabet());
        Self::homogeneous(vec![(u.clone(), one.clone()), (one, v.clone())])
    }

    pub fn alphabet(&self) -> usize {
        self.rhs.alphabet()
    }

    /// `sum_j A_j · x · B_j` (without the right-hand side).
    pub fn apply(&self, x: &Element) -> Element {
        let mut acc = Element::zero(self.alphabet());
        for (a, b) in &self.summands {
            acc += &(&(a * x) * b);
        }
        acc
    }

    pub fn is_solution(&self, x: &Element) -> bool {
        self.apply(x) == self.rhs
    }

    /// Word pairs `(a, b)` of the expanded map `x -> sum a x b`, with pairs
    /// occurring an even number of times removed.
    fn word_pairs(&self) -> Vec<(Word, Word)> {
        let mut count: HashMap<(Word, Word), usize> = HashMap::new();
        for (a, b) in &self.summands {
            for wa in a.terms() {
                for wb in b.terms() {
                    *count.entry((wa.clone(), wb.clone())).or_default() += 1;
                }
            }
        }
        let mut pairs: Vec<(Word, Word)> = count
            .into_iter()
            .filter(|(_, c)| c % 2 == 1)
            .map(|(p, _)| p)
            .collect();
        pairs.sort();
        pairs
    }
}

/// Row-reduced basis of the solutions of degree at most `degree_bound`.
#[derive(Clone, Debug)]
pub struct KernelBasis {
    pub degree_bound: usize,
    pub basis: Vec<Element>,
}

impl KernelBasis {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn span(&self, alphabet: usize) -> Span {
        Span::from_elements(alphabet, &self.basis)
    }
}

#[derive(Clone, Debug)]
pub struct AffineSolution {
    pub particular: Option<Element>,
    pub kernel: KernelBasis,
}

/// All words of degree at most `degree` over `alphabet` letters, in
/// degree-lexicographic order.
pub fn monomial_basis(
    alphabet: usize,
    degree: usize,
    limits: &OracleLimits,
) -> Result<Vec<Word>, LinearError> {
    let count = monomial_count(alphabet, degree);
    if count > limits.column_cap as u128 {
        return Err(LinearError::ResourceCap {
            cap: "column cap",
            required: count,
            limit: limits.column_cap as u128,
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    for m in 0..=degree {
        out.extend(Word::all_of_length(alphabet, m));
    }
    Ok(out)
}

/// Number of words of degree at most `degree`, saturating.
pub fn monomial_count(alphabet: usize, degree: usize) -> u128 {
    let mut total: u128 = 0;
    let mut layer: u128 = 1;
    for _ in 0..=degree {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(alphabet as u128);
    }
    total
}

pub fn kernel_bounded(
    eq: &LinearXEquation,
    degree: usize,
    limits: &OracleLimits,
) -> Result<KernelBasis, LinearError> {
    if !eq.rhs.is_zero() {
        return Err(LinearError::NonHomogeneous);
    }
    Ok(solve_affine(eq, degree, limits)?.kernel)
}

pub fn solve_affine(
    eq: &LinearXEquation,
    degree: usize,
    limits: &OracleLimits,
) -> Result<AffineSolution, LinearError> {
    let k = eq.alphabet();
    for m in 0..=degree {
        let cols = (k as u128).saturating_pow(m as u32);
        if cols > limits.column_cap as u128 {
            return Err(LinearError::ResourceCap {
                cap: "column cap",
                required: cols,
                limit: limits.column_cap as u128,
            });
        }
    }
    let pairs = eq.word_pairs();
    let g = pairs.iter().map(|(a, b)| a.len() + b.len()).max();
    let top_pairs: Vec<(Word, Word)> = match g {
        Some(g) => pairs
            .iter()
            .filter(|(a, b)| a.len() + b.len() == g)
            .cloned()
            .collect(),
        None => Vec::new(),
    };
    let g = g.unwrap_or(0);
    let apply = |y: &Element| -> Element {
        let mut words = Vec::with_capacity(y.len() * pairs.len());
        for w in y.terms() {
            for (a, b) in &pairs {
                words.push(w.sandwich(a, b));
            }
        }
        Element::from_unsorted(words, k)
    };

    let mut partials: Vec<Partial> = Vec::new();
    if !eq.rhs.is_zero() {
        partials.push(Partial {
            y: Element::zero(k),
            image: eq.rhs.clone(),
            affine: true,
        });
    }
    let top_e = (degree + g).max(eq.rhs.deg().unwrap_or(0));
    for e in (0..=top_e).rev() {
        let residuals: Vec<Element> = partials
            .iter()
            .map(|p| p.image.homogeneous_component(e))
            .collect();
        let layer = e.checked_sub(g).filter(|m| *m <= degree);
        let (corrections, rhos, new_kernel) = match layer {
            Some(m) => solve_layer(&top_pairs, m, &residuals, k, limits)?,
            None => (
                vec![Element::zero(k); residuals.len()],
                residuals,
                Vec::new(),
            ),
        };
        for (p, c) in partials.iter_mut().zip(&corrections) {
            if !c.is_zero() {
                p.y += c;
                p.image += &apply(c);
            }
        }
        if rhos.iter().any(|r| !r.is_zero()) {
            let deps = linear_dependencies(&rhos);
            partials = deps
                .iter()
                .map(|mask| {
                    let mut acc = Partial {
                        y: Element::zero(k),
                        image: Element::zero(k),
                        affine: false,
                    };
                    for i in mask.ones() {
                        acc.y += &partials[i].y;
                        acc.image += &partials[i].image;
                        acc.affine ^= partials[i].affine;
                    }
                    acc
                })
                .collect();
        }
        for z in new_kernel {
            let image = apply(&z);
            partials.push(Partial {
                y: z,
                image,
                affine: false,
            });
        }
        if partials.len() > limits.column_cap {
            return Err(LinearError::ResourceCap {
                cap: "column cap",
                required: partials.len() as u128,
                limit: limits.column_cap as u128,
            });
        }
    }
    debug_assert!(partials.iter().all(|p| p.image.is_zero()));

    let mut particular: Option<Element> = None;
    let mut kernel_elems = Vec::new();
    for p in partials {
        if p.affine {
            match &particular {
                None => particular = Some(p.y),
                Some(first) => kernel_elems.push(&p.y + first),
            }
        } else {
            kernel_elems.push(p.y);
        }
    }
    let span = Span::from_elements(k, &kernel_elems);
    let mut particular = particular.map(|x| span.reduce(&x));
    if eq.rhs.is_zero() {
        particular = Some(Element::zero(k));
    }
    Ok(AffineSolution {
        particular,
        kernel: KernelBasis {
            degree_bound: degree,
            basis: span.basis(),
        },
    })
}

struct Partial {
    y: Element,
    image: Element,
    affine: bool,
}

/// Solves the degree-`m` layer map `T(w) = sum_{top pairs} a w b`.
///
/// Returns per residual a correction `y` with `T(y) + R` reduced to a
/// canonical remainder, the remainders, and a basis of `ker T`.
#[allow(clippy::type_complexity)]
fn solve_layer(
    top_pairs: &[(Word, Word)],
    m: usize,
    residuals: &[Element],
    k: usize,
    limits: &OracleLimits,
) -> Result<(Vec<Element>, Vec<Element>, Vec<Element>), LinearError> {
    let ncols = k.pow(m as u32);
    let mut corrections: Vec<Vec<Word>> = vec![Vec::new(); residuals.len()];
    let mut rhos: Vec<Vec<Word>> = vec![Vec::new(); residuals.len()];
    let mut kernel: Vec<Element> = Vec::new();

    let mut residual_rows: HashMap<Word, Vec<usize>> = HashMap::new();
    for (i, r) in residuals.iter().enumerate() {
        for w in r.terms() {
            residual_rows.entry(w.clone()).or_default().push(i);
        }
    }
    let mut consumed = 0usize;

    let image = |w: &Word| -> Vec<Word> {
        let words = top_pairs.iter().map(|(a, b)| w.sandwich(a, b)).collect();
        Element::from_unsorted(words, k).terms().to_vec()
    };
    let index = |w: &Word| -> usize {
        w.letters()
            .iter()
            .fold(0usize, |acc, &g| acc * k + g as usize)
    };

    let mut visited = BitVec::zeros(ncols);
    for start in Word::all_of_length(k, m) {
        let si = index(&start);
        if visited.get(si) {
            continue;
        }
        visited.set(si);
        let first_image = image(&start);
        if first_image.is_empty() {
            kernel.push(Element::from_sorted(vec![start], k));
            continue;
        }
        let single = first_image.iter().all(|r| {
            !residual_rows.contains_key(r)
                && top_pairs.iter().all(|(a, b)| {
                    // the only column reaching r is `start`
                    match r.strip_prefix(a).and_then(|x| x.strip_suffix(b)) {
                        Some(w) => w == start,
                        None => true,
                    }
                })
        });
        if single {
            continue;
        }

        // breadth-first search of the connected component
        let mut cols: Vec<Word> = vec![start.clone()];
        let mut col_images: Vec<Vec<Word>> = vec![first_image];
        let mut row_index: HashMap<Word, usize> = HashMap::new();
        let mut rows: Vec<Word> = Vec::new();
        let mut ci = 0;
        while ci < cols.len() {
            let img = col_images[ci].clone();
            for r in img {
                if row_index.contains_key(&r) {
                    continue;
                }
                row_index.insert(r.clone(), rows.len());
                rows.push(r.clone());
                for (a, b) in top_pairs {
                    if let Some(w) = r.strip_prefix(a).and_then(|x| x.strip_suffix(b)) {
                        let wi = index(&w);
                        if !visited.get(wi) {
                            visited.set(wi);
                            col_images.push(image(&w));
                            cols.push(w);
                        }
                    }
                }
            }
            ci += 1;
        }
        if cols.len() > limits.column_cap {
            return Err(LinearError::ResourceCap {
                cap: "column cap",
                required: cols.len() as u128,
                limit: limits.column_cap as u128,
            });
        }
        let columns: Vec<Vec<usize>> = col_images
            .iter()
            .map(|img| img.iter().map(|r| row_index[r]).collect())
            .collect();
        let ech = Echelon::new(rows.len(), &columns);
        for combo in ech.kernel() {
            let words = combo.ones().map(|j| cols[j].clone()).collect();
            kernel.push(Element::from_unsorted(words, k));
        }
        // residual rows inside this component
        let mut local: HashMap<usize, BitVec> = HashMap::new();
        for (ri, r) in rows.iter().enumerate() {
            if let Some(owners) = residual_rows.get(r) {
                consumed += 1;
                for &i in owners {
                    local
                        .entry(i)
                        .or_insert_with(|| BitVec::zeros(rows.len()))
                        .flip(ri);
                }
            }
        }
        for (i, v) in local {
            let (rem, pre) = ech.reduce(v);
            corrections[i].extend(pre.ones().map(|j| cols[j].clone()));
            rhos[i].extend(rem.ones().map(|r| rows[r].clone()));
        }
    }
    // residual rows no column reaches
    if consumed < residual_rows.len() {
        for (i, r) in residuals.iter().enumerate() {
            for w in r.terms() {
                let reached = top_pairs.iter().any(|(a, b)| {
                    w.strip_prefix(a)
                        .and_then(|x| x.strip_suffix(b))
                        .map(|c| image(&c).contains(w))
                        .unwrap_or(false)
                });
                if !reached {
                    rhos[i].push(w.clone());
                }
            }
        }
    }
    let corrections = corrections
        .into_iter()
        .map(|ws| Element::from_unsorted(ws, k))
        .collect();
    let rhos = rhos
        .into_iter()
        .map(|ws| Element::from_unsorted(ws, k))
        .collect();
    Ok((corrections, rhos, kernel))
}
