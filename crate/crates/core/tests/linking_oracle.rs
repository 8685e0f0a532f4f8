mod common;

use common::{oracle_intersection, oracle_self_intersection, w};
use loopbracket::freegroup::primitive_root;
use loopbracket::sample::{random_primitive, random_rose, rng};
use loopbracket::{
    crossings_between, enumerate_rank2_roses, self_crossing_count, CyclicWord, RibbonRose,
};
use rand::Rng;

fn cyc(text: &str) -> CyclicWord {
    CyclicWord::from_word(&w(text))
}

#[test]
fn oracle_fixed_values() {
    let pants = RibbonRose::pants();
    let torus = RibbonRose::torus1();
    assert_eq!(oracle_intersection(&w("a"), &w("b"), &torus), 1);
    assert_eq!(oracle_intersection(&w("a"), &w("b"), &pants), 0);
    assert_eq!(oracle_intersection(&w("aBB"), &w("aB"), &pants), 2);
    assert_eq!(oracle_self_intersection(&w("aab"), &torus), 0);
    assert_eq!(oracle_self_intersection(&w("aab"), &pants), 1);
    assert_eq!(oracle_self_intersection(&w("aB"), &pants), 1);
    assert_eq!(oracle_self_intersection(&w("ab"), &torus), 0);
}

#[test]
fn crossings_match_oracle_on_random_roses() {
    let mut r = rng(0x11);
    let mut checked = 0;
    while checked < 300 {
        let rank = r.gen_range(2..=3);
        let rose = random_rose(&mut r, rank);
        let w1 = random_primitive(&mut r, rank, 6);
        let w2 = random_primitive(&mut r, rank, 6);
        if w1 == w2 || w1 == w2.inverse() {
            continue;
        }
        let count = crossings_between(&w1, &w2, &rose).unwrap().len();
        let expected = oracle_intersection(&w1.as_word(), &w2.as_word(), &rose);
        assert_eq!(count, expected, "{w1} vs {w2} on {rose}");
        checked += 1;
    }
}

#[test]
fn self_crossings_match_oracle_on_random_roses() {
    let mut r = rng(0x12);
    for _ in 0..300 {
        let rank = r.gen_range(2..=3);
        let rose = random_rose(&mut r, rank);
        let b = random_primitive(&mut r, rank, 8);
        let count = self_crossing_count(&b, &rose).unwrap();
        assert_eq!(
            count,
            oracle_self_intersection(&b.as_word(), &rose),
            "{b} on {rose}"
        );
    }
}

#[test]
fn homology_lower_bound_on_torus1() {
    let torus = RibbonRose::torus1();
    let homology = |c: &CyclicWord| {
        let mut h = [0i64; 2];
        for l in c.letters() {
            h[l.index()] += if l.is_inverted() { -1 } else { 1 };
        }
        h
    };
    let mut r = rng(0x13);
    for _ in 0..300 {
        let w1 = random_primitive(&mut r, 2, 6);
        let w2 = random_primitive(&mut r, 2, 6);
        if w1 == w2 || w1 == w2.inverse() {
            continue;
        }
        let (h1, h2) = (homology(&w1), homology(&w2));
        let det = (h1[0] * h2[1] - h1[1] * h2[0]).unsigned_abs() as usize;
        let crossings = crossings_between(&w1, &w2, &torus).unwrap();
        assert!(crossings.len() >= det, "{w1} vs {w2}");
        // signed count is the algebraic intersection number
        let signed: i64 = crossings.iter().map(|c| c.sign as i64).sum();
        assert_eq!(signed.unsigned_abs() as usize, det, "{w1} vs {w2}");
    }
}

#[test]
fn every_rank2_rose_agrees_with_oracle_on_short_words() {
    let words = ["a", "b", "ab", "aB", "aab", "aBB", "abAB", "aabb", "aBab"];
    for rose in enumerate_rank2_roses() {
        for (i, x) in words.iter().enumerate() {
            let cx = cyc(x);
            assert_eq!(primitive_root(&cx).1, 1);
            assert_eq!(
                self_crossing_count(&cx, &rose).unwrap(),
                oracle_self_intersection(&cx.as_word(), &rose),
                "{x} on {rose}"
            );
            for y in &words[i + 1..] {
                let cy = cyc(y);
                assert_eq!(
                    crossings_between(&cx, &cy, &rose).unwrap().len(),
                    oracle_intersection(&cx.as_word(), &cy.as_word(), &rose),
                    "{x} vs {y} on {rose}"
                );
            }
        }
    }
}
