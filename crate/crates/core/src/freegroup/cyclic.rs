use std::fmt;

use serde::{Deserialize, Serialize};

use super::{write_letters, Letter, Word};

/// Splits a reduced word as `conjugator · core · conjugator⁻¹` with `core`
/// cyclically reduced.
pub fn cyclic_reduce(w: &Word) -> (Word, Word) {
    let letters = w.letters();
    let n = letters.len();
    let mut k = 0;
    while 2 * k + 1 < n && letters[k].is_inverse_of(letters[n - 1 - k]) {
        k += 1;
    }
    (
        Word::from_reduced(letters[k..n - k].to_vec()),
        Word::from_reduced(letters[..k].to_vec()),
    )
}

/// Offset of the least rotation (letter order) of a nonempty sequence.
fn least_rotation(letters: &[Letter]) -> usize {
    let n = letters.len();
    (0..n)
        .min_by(|&i, &j| {
            let a = letters[i..].iter().chain(&letters[..i]);
            let b = letters[j..].iter().chain(&letters[..j]);
            a.cmp(b)
        })
        .unwrap_or(0)
}

/// A cyclically reduced word stored in its least rotation. Equal values are
/// exactly the conjugate words, i.e. the free homotopy classes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord(Vec<Letter>);

impl CyclicWord {
    pub fn from_word(w: &Word) -> Self {
        Self::canonical_with_conjugator(w).0
    }

    /// The canonical cyclic word of `w` together with `g` such that
    /// `g · w · g⁻¹` equals it as a reduced word.
    pub fn canonical_with_conjugator(w: &Word) -> (Self, Word) {
        let (core, c) = cyclic_reduce(w);
        let letters = core.letters();
        let shift = least_rotation(letters);
        let rotated: Vec<Letter> = letters[shift..]
            .iter()
            .chain(&letters[..shift])
            .copied()
            .collect();
        // core = p·q, rotation = q·p = p⁻¹·core·p, so g = (c·p)⁻¹
        let p = Word::from_reduced(letters[..shift].to_vec());
        let g = (&c * &p).inverse();
        (CyclicWord(rotated), g)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The stored rotation as a based word.
    pub fn as_word(&self) -> Word {
        Word::from_reduced(self.0.clone())
    }

    /// The based loop read from position `k`: `x_k x_{k+1} … x_{k-1}`.
    pub fn rotation(&self, k: usize) -> Word {
        let k = k % self.len().max(1);
        Word::from_reduced(self.0[k..].iter().chain(&self.0[..k]).copied().collect())
    }

    pub fn at(&self, k: usize) -> Letter {
        self.0[k % self.0.len()]
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord::from_word(&self.as_word().inverse())
    }

    pub fn rank_hint(&self) -> usize {
        self.0.iter().map(|l| l.index() + 1).max().unwrap_or(0)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

/// Root and exponent of a cyclically reduced word: `c = rootⁿ` with `n`
/// maximal. The root of a canonical word is its prefix of one period, which is
/// itself canonical. The empty word gives `(empty, 0)`.
pub fn primitive_root(c: &CyclicWord) -> (CyclicWord, u32) {
    let n = c.len();
    if n == 0 {
        return (CyclicWord::default(), 0);
    }
    let letters = c.letters();
    let period = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| (d..n).all(|i| letters[i] == letters[i - d]))
        .unwrap_or(n);
    let root = CyclicWord::from_word(&Word::from_reduced(letters[..period].to_vec()));
    (root, (n / period) as u32)
}

/// A free homotopy class, kept with its root decomposition
/// `canonical = root^exponent`. The trivial class has an empty canonical word
/// and exponent 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeClass {
    canonical: CyclicWord,
    root: CyclicWord,
    exponent: u32,
}

pub fn free_class(w: &Word) -> FreeClass {
    FreeClass::from_cyclic(CyclicWord::from_word(w))
}

impl FreeClass {
    pub fn from_cyclic(canonical: CyclicWord) -> Self {
        let (root, exponent) = primitive_root(&canonical);
        FreeClass {
            canonical,
            root,
            exponent,
        }
    }

    pub fn trivial() -> Self {
        FreeClass::default()
    }

    pub fn canonical(&self) -> &CyclicWord {
        &self.canonical
    }

    pub fn root(&self) -> &CyclicWord {
        &self.root
    }

    /// The largest `n` with the class an `n`-th power; 0 for the trivial class.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_trivial(&self) -> bool {
        self.exponent == 0
    }

    pub fn representative(&self) -> Word {
        self.canonical.as_word()
    }

    pub fn inverse(&self) -> FreeClass {
        FreeClass::from_cyclic(self.canonical.inverse())
    }

    pub fn power(&self, k: i64) -> FreeClass {
        free_class(&self.representative().power(k))
    }

    /// When both classes are powers of one primitive class `b` (up to
    /// orientation), returns the signed exponents `(k1, k2)` of
    /// `self = ⟨b^k1⟩`, `other = ⟨b^k2⟩` with `b = self.root()` and `k1 > 0`.
    pub fn common_root_exponents(&self, other: &FreeClass) -> Option<(i64, i64)> {
        if self.is_trivial() || other.is_trivial() {
            return None;
        }
        let k1 = self.exponent as i64;
        if self.root == other.root {
            Some((k1, other.exponent as i64))
        } else if self.root == other.root.inverse() {
            Some((k1, -(other.exponent as i64)))
        } else {
            None
        }
    }

    pub fn rank_hint(&self) -> usize {
        self.canonical.rank_hint()
    }
}

impl fmt::Display for FreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.canonical.fmt(f)
    }
}

impl Serialize for FreeClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FreeClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w: Word = Word::deserialize(d)?;
        Ok(free_class(&w))
    }
}

impl From<&Word> for FreeClass {
    fn from(w: &Word) -> Self {
        free_class(w)
    }
}
