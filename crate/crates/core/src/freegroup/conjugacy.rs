use crate::error::{Error, Result};

use super::cyclic::{cyclic_reduce, primitive_root, CyclicWord};
use super::{Letter, Word};

/// Generator `s` of the centralizer of a nontrivial `w`: the conjugate of the
/// primitive root of its cyclic core.
pub fn centralizer_generator(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::TrivialCentralizer);
    }
    let (core, c) = cyclic_reduce(w);
    let letters = core.letters();
    let (_, n) = primitive_root(&CyclicWord::from_word(&core));
    let root = Word::from_reduced(letters[..letters.len() / n as usize].to_vec());
    Ok(root.conjugated_by(&c))
}

/// Some `g` with `g · u · g⁻¹ = v`, if `u` and `v` are conjugate. No
/// particular witness is promised.
pub fn find_conjugator(u: &Word, v: &Word) -> Option<Word> {
    let (core_u, c_u) = cyclic_reduce(u);
    let (core_v, c_v) = cyclic_reduce(v);
    if core_u.len() != core_v.len() {
        return None;
    }
    let n = core_u.len();
    if n == 0 {
        return Some(Word::identity());
    }
    let lu = core_u.letters();
    let lv = core_v.letters();
    let shift = (0..n).find(|&j| (0..n).all(|i| lu[(i + j) % n] == lv[i]))?;
    // core_v = p⁻¹ · core_u · p with p the first `shift` letters of core_u
    let p = Word::from_reduced(lu[..shift].to_vec());
    Some(&(&c_v * &p.inverse()) * &c_u.inverse())
}

/// Search radius for the power `i` in `sⁱ · w · s⁻ⁱ = target`.
pub fn simultaneous_conjugacy_window(w: &Word, target: &Word) -> i64 {
    2 * (w.len() + target.len()) as i64 + 2
}

/// Some `g` conjugating `u1` to `v1` and `u2` to `v2` at once.
///
/// After fixing one conjugator `g0` for the first pair, every other one is
/// `sⁱ · g0` with `s` generating the centralizer of `v1`, so only the power
/// `i` is searched.
pub fn simultaneous_conjugacy(u1: &Word, u2: &Word, v1: &Word, v2: &Word) -> Result<Option<Word>> {
    if u1.is_empty() {
        return Err(Error::TrivialCentralizer);
    }
    let Some(g0) = find_conjugator(u1, v1) else {
        return Ok(None);
    };
    let s = centralizer_generator(v1)?;
    let w = u2.conjugated_by(&g0);
    if &w == v2 {
        return Ok(Some(g0));
    }
    if w.conjugated_by(&s) == w {
        return Ok(None);
    }
    let window = simultaneous_conjugacy_window(&w, v2);
    let s_inv = s.inverse();
    for (step, step_inv) in [(&s, &s_inv), (&s_inv, &s)] {
        let mut x = w.clone();
        let mut conj = Word::identity();
        for _ in 0..window {
            x = &(step * &x) * step_inv;
            conj = step * &conj;
            if &x == v2 {
                return Ok(Some(&conj * &g0));
            }
        }
    }
    Ok(None)
}

/// Every reduced word over `rank` generators of length at most `max_len`, in
/// shortlex order.
pub fn reduced_words(rank: usize, max_len: usize) -> Vec<Word> {
    let mut all = vec![Word::identity()];
    let mut frontier = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for prefix in &frontier {
            for slot in 0..2 * rank {
                let l = Letter::from_slot(slot);
                if prefix.last().is_some_and(|p| p.is_inverse_of(l)) {
                    continue;
                }
                let mut word = prefix.clone();
                word.push(l);
                next.push(word);
            }
        }
        all.extend(next.iter().cloned().map(Word::from_reduced));
        frontier = next;
    }
    all
}

/// Exhaustive search over all `g` with `|g| ≤ max_len`.
pub fn brute_force_simconj(
    u1: &Word,
    u2: &Word,
    v1: &Word,
    v2: &Word,
    max_len: usize,
) -> Option<Word> {
    let rank = [u1, u2, v1, v2]
        .iter()
        .map(|w| w.rank_hint())
        .max()
        .unwrap_or(0)
        .max(1);
    reduced_words(rank, max_len)
        .into_iter()
        .find(|g| &u1.conjugated_by(g) == v1 && &u2.conjugated_by(g) == v2)
}
