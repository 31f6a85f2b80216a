use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A monomial: a finite sequence of generator indices.
///
/// Words are ordered degree-lexicographically: shorter words come first,
/// words of equal length compare letter by letter with `a < b < c < ...`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[u8; 16]>);

impl Word {
    /// The empty word, written `1`.
    pub fn one() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_letters(letters: &[u8]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letter(g: u8) -> Self {
        let mut v = SmallVec::new();
        v.push(g);
        Word(v)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter index plus one, or 0 for the empty word.
    pub fn min_alphabet(&self) -> usize {
        self.0.iter().map(|&g| g as usize + 1).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = SmallVec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `a · self · b`.
    pub fn sandwich(&self, a: &Word, b: &Word) -> Word {
        let mut v = SmallVec::with_capacity(a.len() + self.len() + b.len());
        v.extend_from_slice(&a.0);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&b.0);
        Word(v)
    }

    pub fn pow(&self, n: usize) -> Word {
        let mut v = SmallVec::with_capacity(self.len() * n);
        for _ in 0..n {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::from_letters(&self.0[start..end])
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    pub fn strip_prefix(&self, prefix: &Word) -> Option<Word> {
        self.0
            .strip_prefix(prefix.0.as_slice())
            .map(Word::from_letters)
    }

    pub fn strip_suffix(&self, suffix: &Word) -> Option<Word> {
        self.0
            .strip_suffix(suffix.0.as_slice())
            .map(Word::from_letters)
    }

    /// Position of this word among all words over `k` letters in
    /// degree-lexicographic order, counting from `1` at rank 0.
    pub fn rank(&self, k: usize) -> Option<u128> {
        let k = k as u128;
        let mut offset: u128 = 0;
        let mut block: u128 = 1;
        for _ in 0..self.len() {
            offset = offset.checked_add(block)?;
            block = block.checked_mul(k)?;
        }
        let mut within: u128 = 0;
        for &g in self.0.iter() {
            within = within.checked_mul(k)?.checked_add(g as u128)?;
        }
        offset.checked_add(within)
    }

    /// All words of length exactly `len` over `k` letters, in lexicographic order.
    pub fn all_of_length(k: usize, len: usize) -> WordsOfLength {
        WordsOfLength {
            k: k as u8,
            current: if k == 0 && len > 0 {
                None
            } else {
                Some(vec![0; len])
            },
        }
    }
}

/// Iterator over the words of a fixed length, see [`Word::all_of_length`].
pub struct WordsOfLength {
    k: u8,
    current: Option<Vec<u8>>,
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.as_mut()?;
        let out = Word::from_letters(cur);
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i] + 1 < self.k {
                cur[i] += 1;
                for c in cur[i + 1..].iter_mut() {
                    *c = 0;
                }
                break;
            }
        }
        Some(out)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.as_slice().cmp(other.0.as_slice()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for &g in self.0.iter() {
            write!(f, "{}", (b'a' + g) as char)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses a single word such as `abac` or `1`. Letters beyond `z` are not expressible.
impl std::str::FromStr for Word {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::one());
        }
        let mut letters = SmallVec::new();
        for ch in s.chars() {
            match ch {
                'a'..='z' => letters.push(ch as u8 - b'a'),
                '*' => {}
                c if c.is_whitespace() => {}
                c => return Err(format!("unexpected character {c:?} in word")),
            }
        }
        if letters.is_empty() {
            return Err("empty word".into());
        }
        Ok(Word(letters))
    }
}
