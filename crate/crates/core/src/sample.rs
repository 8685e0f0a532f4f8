//! Seeded generators for fuzzing: words, primitive cyclic words, classes and
//! ribbon roses. Everything is driven by a `ChaCha8Rng`, so a seed fixes the
//! stream on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::freegroup::{primitive_root, CyclicWord, FreeClass, Letter, Word};
use crate::surface::RibbonRose;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_letter<R: Rng>(rng: &mut R, rank: usize) -> Letter {
    Letter::from_slot(rng.gen_range(0..2 * rank))
}

/// A reduced word of exactly `len` letters over generators `< rank`.
pub fn random_word<R: Rng>(rng: &mut R, rank: usize, len: usize) -> Word {
    assert!(rank > 0, "rank must be positive");
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = random_letter(rng, rank);
        if letters.last().is_some_and(|p| p.is_inverse_of(l)) {
            continue;
        }
        letters.push(l);
    }
    Word::from_reduced(letters)
}

/// A cyclically reduced word of exactly `len ≥ 1` letters.
pub fn random_cyclic_word<R: Rng>(rng: &mut R, rank: usize, len: usize) -> CyclicWord {
    assert!(len > 0, "length must be positive");
    loop {
        let w = random_word(rng, rank, len);
        let (first, last) = (w.first().unwrap(), w.last().unwrap());
        if len == 1 || !first.is_inverse_of(last) {
            return CyclicWord::from_word(&w);
        }
    }
}

/// A primitive (non-power) cyclic word with length in `1..=max_len`.
pub fn random_primitive<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> CyclicWord {
    loop {
        let len = rng.gen_range(1..=max_len);
        let c = random_cyclic_word(rng, rank, len);
        if primitive_root(&c).1 == 1 {
            return c;
        }
    }
}

/// `⟨bⁿ⟩` with `b` primitive of length `≤ max_root_len` and `1 ≤ n ≤ max_exponent`.
pub fn random_class<R: Rng>(
    rng: &mut R,
    rank: usize,
    max_root_len: usize,
    max_exponent: u32,
) -> FreeClass {
    let root = random_primitive(rng, rank, max_root_len);
    let n = rng.gen_range(1..=max_exponent);
    FreeClass::from_cyclic(root).power(n as i64)
}

/// A uniformly random circular order of the `2·rank` directions.
pub fn random_rose<R: Rng>(rng: &mut R, rank: usize) -> RibbonRose {
    let mut sigma: Vec<Letter> = (0..2 * rank).map(Letter::from_slot).collect();
    sigma.shuffle(rng);
    RibbonRose::new(sigma).expect("a permutation of all directions")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let a: Vec<Word> = {
            let mut r = rng(7);
            (0..20).map(|i| random_word(&mut r, 3, i)).collect()
        };
        let b: Vec<Word> = {
            let mut r = rng(7);
            (0..20).map(|i| random_word(&mut r, 3, i)).collect()
        };
        assert_eq!(a, b);
        assert!(a.iter().enumerate().all(|(i, w)| w.len() == i));
    }

    #[test]
    fn generated_shapes() {
        let mut r = rng(1);
        for _ in 0..200 {
            let c = random_class(&mut r, 2, 6, 3);
            assert!(!c.is_trivial());
            assert!(c.root().len() <= 6 && c.exponent() <= 3);
            assert!(c.rank_hint() <= 2);
            let rose = random_rose(&mut r, 3);
            assert_eq!(rose.rank(), 3);
        }
    }
}
