//! Exact word algebra in finitely generated free groups.
//!
//! Generators are indexed from zero. In the compact text form `a`..`z` are the
//! first 26 generators and `A`..`Z` their inverses; `x27` and `x27^-1` name any
//! generator explicitly (1-based, so `x1` is `a`). The empty word prints as `1`.
//!
//! Letters are totally ordered by `a < A < b < B < ...`; canonical rotations of
//! cyclic words and every other tie-break in the crate use this order.

mod conjugacy;
mod cyclic;

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use conjugacy::{
    brute_force_simconj, centralizer_generator, find_conjugator, reduced_words,
    simultaneous_conjugacy, simultaneous_conjugacy_window,
};
pub use cyclic::{cyclic_reduce, free_class, primitive_root, CyclicWord, FreeClass};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    generator: usize,
    inverted: bool,
}

impl Letter {
    pub const fn new(generator: usize, inverted: bool) -> Self {
        Letter {
            generator,
            inverted,
        }
    }

    pub const fn generator(generator: usize) -> Self {
        Letter::new(generator, false)
    }

    pub const fn index(self) -> usize {
        self.generator
    }

    pub const fn is_inverted(self) -> bool {
        self.inverted
    }

    pub const fn inverse(self) -> Self {
        Letter::new(self.generator, !self.inverted)
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverted != other.inverted
    }

    /// Dense index `2 * generator + inverted`, in the letter order.
    pub const fn slot(self) -> usize {
        2 * self.generator + self.inverted as usize
    }

    pub const fn from_slot(slot: usize) -> Self {
        Letter::new(slot / 2, slot % 2 == 1)
    }

    fn write_compact(self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = if self.inverted { b'A' } else { b'a' };
        write!(f, "{}", (base + self.generator as u8) as char)
    }

    fn write_explicit(self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.generator + 1)?;
        if self.inverted {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generator < 26 {
            self.write_compact(f)
        } else {
            self.write_explicit(f)
        }
    }
}

/// A freely reduced word; no two adjacent letters are mutually inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

/// Freely reduces a raw letter sequence.
pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    for x in raw {
        match out.last() {
            Some(&y) if y.is_inverse_of(x) => {
                out.pop();
            }
            _ => out.push(x),
        }
    }
    Word(out)
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
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

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    /// Number of generators needed to spell the word.
    pub fn rank_hint(&self) -> usize {
        self.0.iter().map(|l| l.generator + 1).max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn power(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// `g · self · g⁻¹`.
    pub fn conjugated_by(&self, g: &Word) -> Word {
        reduce(
            g.0.iter()
                .chain(self.0.iter())
                .copied()
                .chain(g.0.iter().rev().map(|l| l.inverse())),
        )
    }

    /// Length-then-lexicographic order.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }

    pub(crate) fn from_reduced(letters: Vec<Letter>) -> Word {
        debug_assert!(letters.windows(2).all(|p| !p[0].is_inverse_of(p[1])));
        Word(letters)
    }
}

/// `g · w · g⁻¹`.
pub fn conjugate(g: &Word, w: &Word) -> Word {
    w.conjugated_by(g)
}

pub fn power(w: &Word, k: i64) -> Word {
    w.power(k)
}

pub fn invert(w: &Word) -> Word {
    w.inverse()
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        let overlap = self
            .0
            .iter()
            .rev()
            .zip(rhs.0.iter())
            .take_while(|(x, y)| x.is_inverse_of(**y))
            .count();
        let mut out = Vec::with_capacity(self.len() + rhs.len() - 2 * overlap);
        out.extend_from_slice(&self.0[..self.len() - overlap]);
        out.extend_from_slice(&rhs.0[overlap..]);
        Word(out)
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        &self * &rhs
    }
}

pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "1");
    }
    if letters.iter().all(|l| l.generator < 26) {
        letters.iter().try_for_each(|l| l.write_compact(f))
    } else {
        for (i, l) in letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            l.write_explicit(f)?;
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

/// Parses letters in either the compact or the explicit `x<n>^-1` syntax.
/// Whitespace is ignored and the result is not reduced.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>> {
    let bytes = text.as_bytes();
    let trimmed = text.trim();
    if trimmed == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c == b'x' && bytes.get(i + 1).is_some_and(|d| d.is_ascii_digit()) {
            let start = i;
            i += 1;
            let digits_start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: usize = text[digits_start..i]
                .parse()
                .map_err(|_| Error::parse(start, "generator index too large"))?;
            if n == 0 {
                return Err(Error::parse(
                    digits_start,
                    "generators are numbered from x1",
                ));
            }
            let mut inverted = false;
            if bytes.get(i) == Some(&b'^') {
                if text[i..].starts_with("^-1") {
                    inverted = true;
                    i += 3;
                } else if text[i..].starts_with("^1") {
                    i += 2;
                } else {
                    return Err(Error::parse(i, "only ^-1 and ^1 exponents are allowed"));
                }
            }
            out.push(Letter::new(n - 1, inverted));
        } else if c.is_ascii_lowercase() {
            out.push(Letter::new((c - b'a') as usize, false));
            i += 1;
        } else if c.is_ascii_uppercase() {
            out.push(Letter::new((c - b'A') as usize, true));
            i += 1;
        } else {
            let ch = text[i..].chars().next().unwrap_or('?');
            return Err(Error::parse(i, format!("unexpected character {ch:?}")));
        }
    }
    Ok(out)
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        parse_letters(s).map(reduce)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
pub(crate) fn w(text: &str) -> Word {
    text.parse().unwrap()
}
