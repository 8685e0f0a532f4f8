//! Intersection points of taut representatives, read off the circular order of
//! ends in the universal cover of a ribbon rose.
//!
//! A cyclically reduced word passes through the vertex once per letter. Pass
//! `k` leaves along the ray `x_k x_{k+1} …` and arrives from the ray
//! `x_{k-1}⁻¹ x_{k-2}⁻¹ …`. Two passes cross exactly when their four rays
//! alternate around the vertex. When the two strands run together along a
//! shared segment, every pass pair on that segment alternates; the crossing is
//! recorded once, at the vertex where strand 1 enters the shared segment, which
//! is the vertex whose incoming direction of strand 1 is used by neither
//! direction of strand 2.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::freegroup::{free_class, CyclicWord, Letter, Word};
use crate::surface::RibbonRose;

/// The infinite reduced word `preperiod · period · period · …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ray {
    preperiod: Word,
    period: Word,
}

impl Ray {
    pub fn new(preperiod: Word, period: Word) -> Result<Self> {
        let (first, last) = match (period.first(), period.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(Error::EmptyWord),
        };
        let junction_ok = preperiod.last().is_none_or(|p| !p.is_inverse_of(first));
        if last.is_inverse_of(first) || !junction_ok {
            return Err(Error::Invariant(format!(
                "ray {preperiod}·({period})^∞ is not reduced"
            )));
        }
        Ok(Ray { preperiod, period })
    }

    pub(crate) fn periodic(period: Word) -> Self {
        Ray {
            preperiod: Word::identity(),
            period,
        }
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    pub fn first(&self) -> Letter {
        self.letters().next().expect("rays are infinite")
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.preperiod
            .letters()
            .iter()
            .chain(self.period.letters().iter().cycle())
            .copied()
    }

    /// Boundary coordinates: the position of the first letter in sigma, then
    /// for each later letter the positive distance from the previous letter's
    /// inverse.
    pub fn coordinates<'a>(&'a self, rose: &'a RibbonRose) -> impl Iterator<Item = usize> + 'a {
        let mut previous: Option<Letter> = None;
        self.letters().map(move |y| {
            let c = match previous {
                None => rose.position(y),
                Some(p) => rose.distance(p.inverse(), y),
            };
            previous = Some(y);
            c
        })
    }
}

pub fn ray_angle(r: &Ray, rose: &RibbonRose, depth: usize) -> Vec<usize> {
    r.coordinates(rose).take(depth).collect()
}

/// Two eventually periodic words that agree this far agree forever.
fn agreement_bound(r1: &Ray, r2: &Ray) -> usize {
    r1.preperiod.len().max(r2.preperiod.len()) + r1.period.len() + r2.period.len()
}

/// Order of rays around the vertex, cut just before `a₁`.
pub fn compare_rays(r1: &Ray, r2: &Ray, rose: &RibbonRose) -> Ordering {
    let depth = agreement_bound(r1, r2) + 1;
    r1.coordinates(rose)
        .take(depth)
        .cmp(r2.coordinates(rose).take(depth))
}

fn common_prefix_len(r1: &Ray, r2: &Ray) -> usize {
    let bound = agreement_bound(r1, r2) + 1;
    r1.letters()
        .zip(r2.letters())
        .take(bound)
        .take_while(|(x, y)| x == y)
        .count()
}

/// One passage of a word through the vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pass {
    pub word_id: usize,
    pub position: usize,
    pub in_ray: Ray,
    pub out_ray: Ray,
}

impl Pass {
    fn new(word_id: usize, word: &CyclicWord, position: usize) -> Self {
        let based = word.rotation(position);
        Pass {
            word_id,
            position,
            in_ray: Ray::periodic(based.inverse()),
            out_ray: Ray::periodic(based),
        }
    }

    /// The loop based at this pass, read in the word's direction.
    pub fn based_loop(&self) -> &Word {
        &self.out_ray.period
    }

    fn uses_direction(&self, d: Letter) -> bool {
        self.in_ray.first() == d || self.out_ray.first() == d
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub pass1: Pass,
    pub pass2: Pass,
    pub sign: i8,
}

/// Sign of the crossing of two passes, or `None` when their rays do not
/// alternate. `+1` for circular order `(I₁, O₂, O₁, I₂)`, `-1` for
/// `(I₁, I₂, O₁, O₂)`.
fn crossing_sign(p1: &Pass, p2: &Pass, rose: &RibbonRose) -> Result<Option<i8>> {
    // 0 = I1, 1 = O1, 2 = I2, 3 = O2
    let rays = [&p1.in_ray, &p1.out_ray, &p2.in_ray, &p2.out_ray];
    let mut order = [0usize, 1, 2, 3];
    let mut collision = false;
    order.sort_by(|&i, &j| {
        let c = compare_rays(rays[i], rays[j], rose);
        if c == Ordering::Equal && i != j {
            collision = true;
        }
        c
    });
    if collision {
        return Err(Error::RootViolation);
    }
    let start = order.iter().position(|&i| i == 0).expect("I1 present");
    order.rotate_left(start);
    Ok(match order {
        [0, 3, 1, 2] => Some(1),
        [0, 2, 1, 3] => Some(-1),
        _ => None,
    })
}

fn check_words(words: &[&CyclicWord], rose: &RibbonRose) -> Result<()> {
    for w in words {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        rose.check_generator(w.rank_hint())?;
    }
    Ok(())
}

/// Crossings of the taut representatives of two cyclic words with distinct
/// primitive roots, sorted by `(k₁, k₂)`.
pub fn crossings_between(
    w1: &CyclicWord,
    w2: &CyclicWord,
    rose: &RibbonRose,
) -> Result<Vec<Crossing>> {
    check_words(&[w1, w2], rose)?;
    let (c1, c2) = (free_class(&w1.as_word()), free_class(&w2.as_word()));
    if c1.common_root_exponents(&c2).is_some() {
        return Err(Error::CommonRoot);
    }
    let passes2: Vec<Pass> = (0..w2.len()).map(|k| Pass::new(1, w2, k)).collect();
    let mut out = Vec::new();
    for k1 in 0..w1.len() {
        let p1 = Pass::new(0, w1, k1);
        let entry = p1.in_ray.first();
        for p2 in &passes2 {
            if p2.uses_direction(entry) {
                continue;
            }
            if let Some(sign) = crossing_sign(&p1, p2, rose)? {
                out.push(Crossing {
                    pass1: p1.clone(),
                    pass2: p2.clone(),
                    sign,
                });
            }
        }
    }
    Ok(out)
}

/// Self-crossings of the taut representative of a primitive cyclic word, one
/// per double point, sorted by `(k, k′)`.
pub fn self_crossings(w: &CyclicWord, rose: &RibbonRose) -> Result<Vec<Crossing>> {
    check_words(&[w], rose)?;
    if free_class(&w.as_word()).exponent() != 1 {
        return Err(Error::NotPrimitive);
    }
    let n = w.len();
    let passes: Vec<Pass> = (0..n).map(|k| Pass::new(0, w, k)).collect();
    let mut out = Vec::new();
    for (k1, p1) in passes.iter().enumerate() {
        for (k2, p2) in passes.iter().enumerate() {
            if k1 == k2 || p2.uses_direction(p1.in_ray.first()) {
                continue;
            }
            let Some(sign) = crossing_sign(p1, p2, rose)? else {
                continue;
            };
            // The same double point is also seen from strand 2's entry vertex.
            let partner = if p1.uses_direction(p2.in_ray.first()) {
                let shared = common_prefix_len(&p1.out_ray, &p2.in_ray);
                ((k2 + n - shared % n) % n, (k1 + shared) % n)
            } else {
                (k2, k1)
            };
            if (k1, k2) <= partner {
                out.push(Crossing {
                    pass1: p1.clone(),
                    pass2: p2.clone(),
                    sign,
                });
            }
        }
    }
    Ok(out)
}

pub fn self_crossing_count(w: &CyclicWord, rose: &RibbonRose) -> Result<usize> {
    self_crossings(w, rose).map(|c| c.len())
}
