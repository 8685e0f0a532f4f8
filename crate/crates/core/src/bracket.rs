//! The Andersen–Mattes–Reshetikhin bracket of two free homotopy classes, its
//! smoothing to the Goldman bracket, and the intersection numbers read off
//! from the number of terms.
//!
//! A term of the bracket is a one-chord diagram: two loops based at the chord
//! point. Two such diagrams are homotopic exactly when one pair of based loops
//! is carried to the other by a single conjugation, so a term is normalised by
//! conjugating its first loop to canonical cyclic form and then choosing the
//! shortlex-least second loop among the conjugates by powers of the first
//! loop's root. No 4T relation involves a one-chord diagram, so these
//! normal forms are a free basis for the terms.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::freegroup::{free_class, primitive_root, CyclicWord, FreeClass, Word};
use crate::linking::{crossings_between, self_crossings};
use crate::surface::RibbonRose;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ChordTerm {
    pub sign: i8,
    pub first: Word,
    pub second: Word,
}

impl ChordTerm {
    pub fn new(sign: i8, first: Word, second: Word) -> Self {
        ChordTerm {
            sign,
            first,
            second,
        }
    }

    pub fn diagram(&self) -> ChordDiagram {
        ChordDiagram {
            first: self.first.clone(),
            second: self.second.clone(),
        }
    }
}

/// An unsigned one-chord diagram, as a pair of loops based at the chord.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ChordDiagram {
    pub first: Word,
    pub second: Word,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BracketResult {
    /// One term per intersection point of the representatives.
    pub raw: Vec<ChordTerm>,
    /// Canonical diagrams with nonzero accumulated coefficients.
    pub reduced: BTreeMap<ChordDiagram, i64>,
}

impl BracketResult {
    pub fn terms_count(&self) -> u64 {
        self.reduced.values().map(|c| c.unsigned_abs()).sum()
    }
}

/// Shortlex-least element of `{ sⁱ · w · s⁻ⁱ }` for cyclically reduced `s`.
///
/// Once a conjugation step cancels nothing, the word starts with `s` and ends
/// with `s⁻¹`, so every later step in that direction adds `2|s|` letters.
fn least_conjugate_by_powers(w: &Word, s: &Word) -> Word {
    if w.conjugated_by(s) == *w {
        return w.clone();
    }
    let window = 2 * (w.len() + s.len()) + 2;
    let s_inv = s.inverse();
    let mut best = w.clone();
    for (step, step_inv) in [(s, &s_inv), (&s_inv, s)] {
        let mut x = w.clone();
        for _ in 0..window {
            let next = &(step * &x) * step_inv;
            let grew_fully = next.len() == x.len() + 2 * s.len();
            if next.shortlex_cmp(&best).is_lt() {
                best = next.clone();
            }
            x = next;
            if grew_fully {
                break;
            }
        }
    }
    best
}

pub fn canonicalize_term(t: &ChordTerm) -> Result<ChordTerm> {
    if t.first.is_empty() || t.second.is_empty() {
        return Err(Error::EmptyWord);
    }
    if free_class(&t.first) == free_class(&t.second) {
        return Err(Error::EqualClasses);
    }
    let (first, g0) = CyclicWord::canonical_with_conjugator(&t.first);
    let (root, _) = primitive_root(&first);
    let second = least_conjugate_by_powers(&t.second.conjugated_by(&g0), &root.as_word());
    Ok(ChordTerm::new(t.sign, first.as_word(), second))
}

/// Collects signed terms by canonical diagram, dropping zero coefficients.
pub fn reduce_terms(raw: &[ChordTerm]) -> Result<BracketResult> {
    let Some(head) = raw.first() else {
        return Ok(BracketResult::default());
    };
    let pair = (free_class(&head.first), free_class(&head.second));
    let mut cache: HashMap<(&Word, &Word), ChordDiagram> = HashMap::new();
    let mut reduced: BTreeMap<ChordDiagram, i64> = BTreeMap::new();
    for t in raw {
        let key = (&t.first, &t.second);
        let diagram = match cache.get(&key) {
            Some(d) => d.clone(),
            None => {
                if (free_class(&t.first), free_class(&t.second)) != pair {
                    return Err(Error::MixedClassPairs);
                }
                let d = canonicalize_term(t)?.diagram();
                cache.insert(key, d.clone());
                d
            }
        };
        *reduced.entry(diagram).or_insert(0) += t.sign as i64;
    }
    reduced.retain(|_, c| *c != 0);
    Ok(BracketResult {
        raw: raw.to_vec(),
        reduced,
    })
}

fn check_classes(classes: &[&FreeClass], rose: &RibbonRose) -> Result<()> {
    classes
        .iter()
        .try_for_each(|c| rose.check_generator(c.rank_hint()))
}

/// Terms for two powers of one primitive class `b`: push the two copies off
/// `b` to either side; near each double point of `b` they meet `2|k₁k₂|`
/// times, in two families of opposite sign.
fn same_root_terms(b: &CyclicWord, k1: i64, k2: i64, rose: &RibbonRose) -> Result<Vec<ChordTerm>> {
    let copies = (k1 * k2).unsigned_abs() as usize;
    let orientation = k2.signum() as i8;
    let mut raw = Vec::new();
    for c in self_crossings(b, rose)? {
        let here = c.pass1.based_loop();
        let there = c.pass2.based_loop();
        let sign = c.sign * orientation;
        let forward = ChordTerm::new(sign, here.power(k1), there.power(k2));
        let backward = ChordTerm::new(-sign, there.power(k1), here.power(k2));
        raw.extend(std::iter::repeat_n(forward, copies));
        raw.extend(std::iter::repeat_n(backward, copies));
    }
    Ok(raw)
}

pub fn amr_bracket(a1: &FreeClass, a2: &FreeClass, rose: &RibbonRose) -> Result<BracketResult> {
    check_classes(&[a1, a2], rose)?;
    if a1.is_trivial() || a2.is_trivial() || a1 == a2 {
        return Ok(BracketResult::default());
    }
    let raw = match a1.common_root_exponents(a2) {
        Some((k1, k2)) => same_root_terms(a1.root(), k1, k2, rose)?,
        None => crossings_between(a1.canonical(), a2.canonical(), rose)?
            .into_iter()
            .map(|c| {
                ChordTerm::new(
                    c.sign,
                    c.pass1.based_loop().clone(),
                    c.pass2.based_loop().clone(),
                )
            })
            .collect(),
    };
    reduce_terms(&raw)
}

/// The Goldman term of a diagram: the class of the product of its loops.
pub fn smooth(t: &ChordTerm) -> (i8, FreeClass) {
    (t.sign, free_class(&(&t.first * &t.second)))
}

pub fn goldman_bracket(
    a1: &FreeClass,
    a2: &FreeClass,
    rose: &RibbonRose,
) -> Result<BTreeMap<FreeClass, i64>> {
    let amr = amr_bracket(a1, a2, rose)?;
    Ok(smooth_all(&amr.raw))
}

/// Goldman sum of a list of terms, zero coefficients dropped.
pub fn smooth_all(terms: &[ChordTerm]) -> BTreeMap<FreeClass, i64> {
    let mut out: BTreeMap<FreeClass, i64> = BTreeMap::new();
    for t in terms {
        let (sign, class) = smooth(t);
        *out.entry(class).or_insert(0) += sign as i64;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Minimal self-intersection number. For `α = ⟨bⁿ⟩` with `b` primitive it is
/// `i(b)·n² + n − 1`; the trivial class gives 0.
pub fn self_intersection(a: &FreeClass, rose: &RibbonRose) -> Result<u64> {
    check_classes(&[a], rose)?;
    if a.is_trivial() {
        return Ok(0);
    }
    let n = a.exponent() as u64;
    let ib = self_crossings(a.root(), rose)?.len() as u64;
    Ok(ib * n * n + n - 1)
}

/// Minimal number of intersection points between loops in the two classes.
pub fn min_intersection(a1: &FreeClass, a2: &FreeClass, rose: &RibbonRose) -> Result<u64> {
    check_classes(&[a1, a2], rose)?;
    if a1.is_trivial() || a2.is_trivial() {
        return Ok(0);
    }
    if a1 == a2 {
        let n = a1.exponent() as u64;
        return Ok(2 * (self_intersection(a1, rose)? - (n - 1)));
    }
    Ok(amr_bracket(a1, a2, rose)?.terms_count())
}

/// Self-intersection recovered from the bracket of two powers:
/// `terms({αᵖ, α^q}) / (2|pq|) + n − 1`.
pub fn theorem2_selfint(a: &FreeClass, p: i64, q: i64, rose: &RibbonRose) -> Result<u64> {
    if p == q || p == 0 || q == 0 {
        return Err(Error::InvalidExponents { p, q });
    }
    if a.is_trivial() {
        return Err(Error::TrivialClass);
    }
    let terms = amr_bracket(&a.power(p), &a.power(q), rose)?.terms_count();
    let denominator = 2 * (p * q).unsigned_abs();
    if terms % denominator != 0 {
        return Err(Error::Invariant(format!(
            "{terms} bracket terms are not a multiple of 2|pq| = {denominator}"
        )));
    }
    Ok(terms / denominator + a.exponent() as u64 - 1)
}
