//! Independent intersection oracle: counts double cosets `⟨w1⟩ g ⟨w2⟩` whose
//! translated axes are linked in the boundary of the universal cover, using
//! only word reduction and the circular order at the vertex.

#![allow(dead_code)]

use loopbracket::freegroup::reduce;
use loopbracket::{Letter, RibbonRose, Word};

pub fn w(text: &str) -> Word {
    text.parse().unwrap()
}

/// The first `depth` letters of the reduced infinite word `g · w · w · …`.
fn end_of(g: &Word, w: &Word, depth: usize) -> Vec<Letter> {
    let repeats = depth / w.len() + g.len() + 2;
    let raw = g
        .letters()
        .iter()
        .chain(w.letters().iter().cycle().take(repeats * w.len()))
        .copied();
    let mut letters = reduce(raw).letters().to_vec();
    letters.truncate(depth);
    letters
}

/// Boundary address of a ray from the base vertex.
fn address(letters: &[Letter], rose: &RibbonRose) -> Vec<usize> {
    let m = rose.sigma().len();
    let mut out = Vec::with_capacity(letters.len());
    for (i, &y) in letters.iter().enumerate() {
        if i == 0 {
            out.push(rose.position(y));
        } else {
            let back = letters[i - 1].inverse();
            out.push((rose.position(y) + m - rose.position(back)) % m);
        }
    }
    out
}

/// The axis of `w1` and the `g`-translate of the axis of `w2` have
/// alternating ends.
fn linked(w1: &Word, w2: &Word, g: &Word, rose: &RibbonRose, depth: usize) -> bool {
    let id = Word::identity();
    let ends = [
        address(&end_of(&id, &w1.inverse(), depth), rose),
        address(&end_of(&id, w1, depth), rose),
        address(&end_of(g, &w2.inverse(), depth), rose),
        address(&end_of(g, w2, depth), rose),
    ];
    for i in 0..4 {
        for j in i + 1..4 {
            assert_ne!(ends[i], ends[j], "ends coincide for {w1}, {w2}, g = {g}");
        }
    }
    // ends 0,1 belong to axis 1 and 2,3 to axis 2: linked iff exactly one end
    // of axis 2 lies between the ends of axis 1
    let (lo, hi) = if ends[0] < ends[1] {
        (&ends[0], &ends[1])
    } else {
        (&ends[1], &ends[0])
    };
    let inside = |e: &Vec<usize>| lo < e && e < hi;
    inside(&ends[2]) != inside(&ends[3])
}

/// For cyclically reduced `w`, `|wᵗ| = |t|·|w|` fixes `t` up to sign.
fn in_cyclic_subgroup(x: &Word, w: &Word) -> bool {
    if !x.len().is_multiple_of(w.len()) {
        return false;
    }
    let t = (x.len() / w.len()) as i64;
    *x == w.power(t) || *x == w.power(-t)
}

fn linked_double_cosets(w1: &Word, w2: &Word, rose: &RibbonRose, same: bool) -> usize {
    let total = (w1.len() + w2.len()) as i64;
    let depth = 6 * total as usize + 20;
    let mut candidates: Vec<Word> = Vec::new();
    for j in 0..w1.len() {
        for m in 0..w2.len() {
            let p1 = reduce(w1.letters()[..j].iter().copied());
            let p2 = reduce(w2.letters()[..m].iter().copied());
            let g = &p1 * &p2.inverse();
            if !candidates.contains(&g) {
                candidates.push(g);
            }
        }
    }
    let mut reps: Vec<Word> = Vec::new();
    for g in candidates {
        if same && in_cyclic_subgroup(&g, w1) {
            continue;
        }
        if !linked(w1, w2, &g, rose, depth) {
            continue;
        }
        let duplicate = reps.iter().any(|h| {
            (-(total + 2)..=total + 2).any(|s| {
                let x = &(&h.inverse() * &w1.power(-s)) * &g;
                in_cyclic_subgroup(&x, w2)
            })
        });
        if !duplicate {
            reps.push(g);
        }
    }
    reps.len()
}

/// Minimal intersection of two primitive cyclically reduced words with
/// distinct roots.
pub fn oracle_intersection(w1: &Word, w2: &Word, rose: &RibbonRose) -> usize {
    linked_double_cosets(w1, w2, rose, false)
}

/// Minimal self-intersection of a primitive cyclically reduced word.
pub fn oracle_self_intersection(w: &Word, rose: &RibbonRose) -> usize {
    linked_double_cosets(w, w, rose, true) / 2
}
