use std::collections::BTreeMap;

use super::dense::BitVec;
use crate::algebra::{Element, Word};

/// A GF(2) subspace of the algebra held as a reduced echelon basis: every
/// basis element has a distinct leading monomial that occurs in no other
/// basis element.
#[derive(Clone, Debug)]
pub struct Span {
    alphabet: usize,
    by_lead: BTreeMap<Word, Element>,
}

impl Span {
    pub fn new(alphabet: usize) -> Self {
        Span {
            alphabet,
            by_lead: BTreeMap::new(),
        }
    }

    pub fn from_elements<'a, I>(alphabet: usize, elements: I) -> Self
    where
        I: IntoIterator<Item = &'a Element>,
    {
        let mut s = Span::new(alphabet);
        for e in elements {
            s.insert(e);
        }
        s
    }

    pub fn dimension(&self) -> usize {
        self.by_lead.len()
    }

    /// Remainder of `e` modulo the span; zero iff `e` lies in it.
    pub fn reduce(&self, e: &Element) -> Element {
        let mut rem = e.clone();
        let mut bound: Option<Word> = None;
        loop {
            let hit = rem
                .terms()
                .iter()
                .rev()
                .filter(|t| bound.as_ref().map_or(true, |b| *t < b))
                .find(|t| self.by_lead.contains_key(*t))
                .cloned();
            match hit {
                None => return rem,
                Some(t) => {
                    rem += &self.by_lead[&t];
                    bound = Some(t);
                }
            }
        }
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.reduce(e).is_zero()
    }

    /// Adds `e`; returns false when it was already in the span.
    pub fn insert(&mut self, e: &Element) -> bool {
        let r = self.reduce(e);
        let Some(lead) = r.leading_monomial().cloned() else {
            return false;
        };
        for b in self.by_lead.values_mut() {
            if b.contains(&lead) {
                *b += &r;
            }
        }
        self.by_lead.insert(lead, r);
        true
    }

    /// Basis sorted by increasing leading monomial.
    pub fn basis(&self) -> Vec<Element> {
        self.by_lead.values().cloned().collect()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Word> {
        self.by_lead.keys()
    }

    pub fn is_subspace_of(&self, other: &Span) -> bool {
        self.by_lead.values().all(|b| other.contains(b))
    }

    pub fn same_as(&self, other: &Span) -> bool {
        self.dimension() == other.dimension() && self.is_subspace_of(other)
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }
}

/// Basis of `{c : sum_i c_i * vectors[i] = 0}`, as bit masks over the indices.
pub fn linear_dependencies(vectors: &[Element]) -> Vec<BitVec> {
    let n = vectors.len();
    let mut pivots: BTreeMap<Word, (Element, BitVec)> = BTreeMap::new();
    let mut deps = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut rem = v.clone();
        let mut combo = BitVec::zeros(n);
        combo.set(i);
        while let Some(lead) = rem.leading_monomial().cloned() {
            match pivots.get(&lead) {
                Some((p, c)) => {
                    rem += p;
                    combo.xor_assign(c);
                }
                None => break,
            }
        }
        match rem.leading_monomial().cloned() {
            None => deps.push(combo),
            Some(lead) => {
                pivots.insert(lead, (rem, combo));
            }
        }
    }
    deps
}
