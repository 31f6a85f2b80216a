//! Dense bit vectors and Gaussian elimination over GF(2) for small blocks.

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    /// Index of the highest set bit.
    pub fn highest(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Index of the highest set bit strictly below `limit`.
    pub fn highest_below(&self, limit: usize) -> Option<usize> {
        let limit = limit.min(self.len);
        if limit == 0 {
            return None;
        }
        let last = limit - 1;
        let (wi, bi) = (last / 64, last % 64);
        let mask = if bi == 63 {
            u64::MAX
        } else {
            (1u64 << (bi + 1)) - 1
        };
        let head = self.words[wi] & mask;
        if head != 0 {
            return Some(wi * 64 + 63 - head.leading_zeros() as usize);
        }
        self.words[..wi]
            .iter()
            .enumerate()
            .rev()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// Row echelon form of a set of column vectors, pivoting on the highest row.
///
/// Each pivot remembers which input columns it combines, so reductions
/// return both the remainder and a preimage.
pub struct Echelon {
    nrows: usize,
    ncols: usize,
    pivot_at: Vec<Option<usize>>,
    pivots: Vec<(BitVec, BitVec)>,
    kernel: Vec<BitVec>,
}

impl Echelon {
    /// `columns[j]` lists the rows (each `< nrows`) where column `j` is 1.
    pub fn new(nrows: usize, columns: &[Vec<usize>]) -> Self {
        let ncols = columns.len();
        let mut ech = Echelon {
            nrows,
            ncols,
            pivot_at: vec![None; nrows],
            pivots: Vec::new(),
            kernel: Vec::new(),
        };
        for (j, col) in columns.iter().enumerate() {
            let mut v = BitVec::zeros(nrows);
            for &r in col {
                v.flip(r);
            }
            let mut combo = BitVec::zeros(ncols);
            combo.set(j);
            let (v, combo) = ech.reduce_with(v, combo);
            match v.highest() {
                None => ech.kernel.push(combo),
                Some(h) => {
                    ech.pivot_at[h] = Some(ech.pivots.len());
                    ech.pivots.push((v, combo));
                }
            }
        }
        ech
    }

    fn reduce_with(&self, mut v: BitVec, mut combo: BitVec) -> (BitVec, BitVec) {
        // Scan from the top row down; a pivot only touches its own row and below.
        let mut cursor = v.highest();
        while let Some(h) = cursor {
            if let Some(p) = self.pivot_at[h] {
                v.xor_assign(&self.pivots[p].0);
                combo.xor_assign(&self.pivots[p].1);
            }
            cursor = if h == 0 { None } else { v.highest_below(h) };
        }
        (v, combo)
    }

    /// Reduces `v` (over rows) to a canonical remainder; returns
    /// `(remainder, columns whose sum equals v + remainder)`.
    pub fn reduce(&self, v: BitVec) -> (BitVec, BitVec) {
        debug_assert_eq!(v.len(), self.nrows);
        self.reduce_with(v, BitVec::zeros(self.ncols))
    }

    /// Basis of the null space, as combinations of input columns.
    pub fn kernel(&self) -> &[BitVec] {
        &self.kernel
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}
