//! Union-find alignment of letter positions for a fixed degree profile.

use std::collections::HashMap;

use super::{DegreeProfile, HomSystem, HomsysError, MonomialAssignment, Symbol};
use crate::algebra::{Element, Word};

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }
}

/// Two distinct letters forced into one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contradiction {
    /// 1-based equation index.
    pub equation: usize,
    /// 0-based position in the equation sides.
    pub position: usize,
    pub letters: (u8, u8),
}

/// Classes of variable positions; class numbers follow the first
/// appearance in variable order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionPartition {
    pub alphabet: usize,
    pub profile: DegreeProfile,
    /// `classes[i][p]` is the class of position `p` of variable `i`.
    pub classes: Vec<Vec<usize>>,
    /// Letter pinned to each class, `None` when free.
    pub pinned: Vec<Option<u8>>,
}

impl PositionPartition {
    pub fn class_count(&self) -> usize {
        self.pinned.len()
    }

    pub fn free_classes(&self) -> Vec<usize> {
        (0..self.pinned.len())
            .filter(|&c| self.pinned[c].is_none())
            .collect()
    }

    /// Values of the variables when free class `free_classes()[j]` takes
    /// `free_values[j]` and pinned classes keep their letter.
    pub fn lift(&self, free_values: &[Element]) -> HashMap<usize, Element> {
        let free = self.free_classes();
        assert_eq!(free.len(), free_values.len(), "one value per free class");
        let mut value: Vec<Element> = self
            .pinned
            .iter()
            .map(|p| match p {
                Some(g) => Element::generator(*g, self.alphabet).expect("pinned letter in range"),
                None => Element::one(self.alphabet),
            })
            .collect();
        for (c, v) in free.iter().zip(free_values) {
            value[*c] = v.clone();
        }
        self.classes
            .iter()
            .enumerate()
            .map(|(i, cls)| {
                let x = cls
                    .iter()
                    .fold(Element::one(self.alphabet), |acc, &c| &acc * &value[c]);
                (i, x)
            })
            .collect()
    }

    /// Monomial values for letters assigned to the free classes.
    pub fn lift_letters(&self, free_letters: &[u8]) -> MonomialAssignment {
        let free = self.free_classes();
        let mut letter: Vec<u8> = self.pinned.iter().map(|p| p.unwrap_or(0)).collect();
        for (c, g) in free.iter().zip(free_letters) {
            letter[*c] = *g;
        }
        self.classes
            .iter()
            .map(|cls| Word::from_letters(&cls.iter().map(|&c| letter[c]).collect::<Vec<u8>>()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Alignment {
    Partition(PositionPartition),
    Contradiction(Contradiction),
}

/// Nodes: the positions of every variable, then one node per letter.
fn side_nodes(
    sys: &HomSystem,
    side: &[Symbol],
    offsets: &[usize],
    profile: &[usize],
    letter_base: usize,
) -> Result<Vec<usize>, HomsysError> {
    let mut out = Vec::new();
    for s in side {
        match s {
            Symbol::Var(i) => out.extend(offsets[*i]..offsets[*i] + profile[*i]),
            Symbol::Coef(c) => {
                let (name, e) = &sys.coefficients[*c];
                if !e.is_monomial() {
                    return Err(HomsysError::NonMonomialCoefficient(name.clone()));
                }
                out.extend(
                    e.terms()[0]
                        .letters()
                        .iter()
                        .map(|&g| letter_base + g as usize),
                );
            }
        }
    }
    Ok(out)
}

/// Aligns positions under `profile`, processing equations in `order`.
pub fn align_in_order(
    sys: &HomSystem,
    profile: &[usize],
    order: &[usize],
) -> Result<Alignment, HomsysError> {
    sys.check_profile(profile)?;
    let k = sys.alphabet;
    let mut offsets = Vec::with_capacity(profile.len());
    let mut total = 0;
    for d in profile {
        offsets.push(total);
        total += d;
    }
    let mut uf = UnionFind::new(total + k);
    // letter held by each root, if any
    let mut pin: Vec<Option<u8>> = (0..total + k)
        .map(|n| (n >= total).then(|| (n - total) as u8))
        .collect();
    for &e in order {
        let (l, r) = &sys.equations[e];
        let ln = side_nodes(sys, l, &offsets, profile, total)?;
        let rn = side_nodes(sys, r, &offsets, profile, total)?;
        for (pos, (&a, &b)) in ln.iter().zip(&rn).enumerate() {
            let (ra, rb) = (uf.find(a), uf.find(b));
            if ra == rb {
                continue;
            }
            match (pin[ra], pin[rb]) {
                (Some(x), Some(y)) if x != y => {
                    return Ok(Alignment::Contradiction(Contradiction {
                        equation: e + 1,
                        position: pos,
                        letters: (x.min(y), x.max(y)),
                    }))
                }
                (pa, pb) => {
                    uf.parent[ra] = rb;
                    pin[rb] = pa.or(pb);
                }
            }
        }
    }
    let mut number: HashMap<usize, usize> = HashMap::new();
    let mut pinned = Vec::new();
    let mut classes = Vec::with_capacity(profile.len());
    for (i, &d) in profile.iter().enumerate() {
        let mut cls = Vec::with_capacity(d);
        for p in 0..d {
            let root = uf.find(offsets[i] + p);
            let c = *number.entry(root).or_insert_with(|| {
                pinned.push(pin[root]);
                pinned.len() - 1
            });
            cls.push(c);
        }
        classes.push(cls);
    }
    Ok(Alignment::Partition(PositionPartition {
        alphabet: k,
        profile: profile.to_vec(),
        classes,
        pinned,
    }))
}

/// Union-find closure of the position identifications forced by `profile`.
pub fn align(sys: &HomSystem, profile: &[usize]) -> Result<Alignment, HomsysError> {
    let order: Vec<usize> = (0..sys.equations.len()).collect();
    align_in_order(sys, profile, &order)
}

fn checked_power(k: usize, e: usize, limit: u128) -> Result<u128, HomsysError> {
    let mut n: u128 = 1;
    for _ in 0..e {
        n = n.saturating_mul(k as u128);
    }
    if n > limit {
        return Err(HomsysError::ResourceCap { required: n, limit });
    }
    Ok(n)
}

/// Calls `f` on every tuple in `{0..k}^len`, last entry fastest.
fn for_each_tuple(
    k: usize,
    len: usize,
    mut f: impl FnMut(&[u8]) -> Result<(), HomsysError>,
) -> Result<(), HomsysError> {
    let mut t = vec![0u8; len];
    loop {
        f(&t)?;
        let mut i = len;
        loop {
            if i == 0 {
                return Ok(());
            }
            i -= 1;
            t[i] += 1;
            if (t[i] as usize) < k {
                break;
            }
            t[i] = 0;
        }
    }
}

/// All monomial solutions under `profile`: free classes range over the
/// alphabet independently. Refuses more than `cap` assignments.
pub fn enumerate_monomial_solutions(
    sys: &HomSystem,
    profile: &[usize],
    cap: u128,
) -> Result<Vec<MonomialAssignment>, HomsysError> {
    let partition = match align(sys, profile)? {
        Alignment::Contradiction(_) => return Ok(Vec::new()),
        Alignment::Partition(p) => p,
    };
    let free = partition.free_classes().len();
    checked_power(sys.alphabet, free, cap)?;
    let mut out = Vec::new();
    for_each_tuple(sys.alphabet, free, |letters| {
        out.push(partition.lift_letters(letters));
        Ok(())
    })?;
    out.sort();
    Ok(out)
}

/// All monomial solutions under `profile` by substitution of every
/// assignment. Refuses more than `cap` assignments.
pub fn brute_force_monomial_solutions(
    sys: &HomSystem,
    profile: &[usize],
    cap: u128,
) -> Result<Vec<MonomialAssignment>, HomsysError> {
    sys.check_profile(profile)?;
    let total: usize = profile.iter().sum();
    checked_power(sys.alphabet, total, cap)?;
    let mut out = Vec::new();
    for_each_tuple(sys.alphabet, total, |letters| {
        let mut values = Vec::with_capacity(profile.len());
        let mut at = 0;
        for &d in profile {
            values.push(Word::from_letters(&letters[at..at + d]));
            at += d;
        }
        if sys.check_monomial_solution(&values)? {
            out.push(values);
        }
        Ok(())
    })?;
    out.sort();
    Ok(out)
}

/// Every balanced profile with free degrees in `1..=max_degree` (fixed
/// degrees kept) with its monomial solutions.
pub fn scan_profiles(
    sys: &HomSystem,
    max_degree: usize,
    cap: u128,
) -> Result<Vec<(DegreeProfile, Vec<MonomialAssignment>)>, HomsysError> {
    let m = sys.variables.len();
    let open: Vec<usize> = (0..m)
        .filter(|&i| sys.variables[i].degree.is_none())
        .collect();
    let mut out = Vec::new();
    if max_degree == 0 && !open.is_empty() {
        return Ok(out);
    }
    let mut profile: Vec<usize> = sys
        .variables
        .iter()
        .map(|v| v.degree.unwrap_or(1))
        .collect();
    for_each_tuple(max_degree.max(1), open.len(), |choice| {
        for (j, &i) in open.iter().enumerate() {
            profile[i] = choice[j] as usize + 1;
        }
        if sys.check_profile(&profile).is_ok() {
            out.push((
                profile.clone(),
                enumerate_monomial_solutions(sys, &profile, cap)?,
            ));
        }
        Ok(())
    })?;
    Ok(out)
}
