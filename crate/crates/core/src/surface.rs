//! Oriented surfaces with free fundamental group, modelled as ribbon roses:
//! one vertex, `n` untwisted bands, and the positive circular order of the
//! `2n` departure directions at the vertex.
//!
//! Direction `a` is the start of band `a`; `A` is where band `a` comes back
//! in, i.e. the direction a loop departs along when it reads `a⁻¹`.
//!
//! Text forms: `rose:a,b,A,B` (any direction syntax from the word grammar),
//! the aliases `pants` and `torus1`, and `genus=g,boundary=r` for `r ≥ 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freegroup::{parse_letters, Letter};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonRose {
    sigma: Vec<Letter>,
    positions: Vec<usize>,
}

impl RibbonRose {
    /// Validates a circular order; it is stored cut at `a₁`.
    pub fn new(sigma: Vec<Letter>) -> Result<Self> {
        if sigma.is_empty() || !sigma.len().is_multiple_of(2) {
            return Err(Error::InvalidSurface(format!(
                "expected an even, nonzero number of directions, got {}",
                sigma.len()
            )));
        }
        let rank = sigma.len() / 2;
        let mut positions = vec![usize::MAX; 2 * rank];
        for (i, d) in sigma.iter().enumerate() {
            if d.index() >= rank {
                return Err(Error::InvalidSurface(format!(
                    "direction {d} does not belong to a rank-{rank} rose"
                )));
            }
            if positions[d.slot()] != usize::MAX {
                return Err(Error::InvalidSurface(format!("duplicate direction {d}")));
            }
            positions[d.slot()] = i;
        }
        if let Some(missing) = (0..2 * rank).find(|&s| positions[s] == usize::MAX) {
            return Err(Error::InvalidSurface(format!(
                "missing direction {}",
                Letter::from_slot(missing)
            )));
        }
        let cut = positions[Letter::generator(0).slot()];
        let mut sigma = sigma;
        sigma.rotate_left(cut);
        for (i, d) in sigma.iter().enumerate() {
            positions[d.slot()] = i;
        }
        Ok(RibbonRose { sigma, positions })
    }

    /// Pair of pants: `(a, A, b, B)`.
    pub fn pants() -> Self {
        Self::with_genus_boundary(0, 3).expect("valid")
    }

    /// Once-punctured torus: `(a, b, A, B)`.
    pub fn torus1() -> Self {
        Self::with_genus_boundary(1, 1).expect("valid")
    }

    /// Genus `g` with `r ≥ 1` boundary components: blocks `(aᵢ, bᵢ, aᵢ⁻¹, bᵢ⁻¹)`
    /// followed by `(cⱼ, cⱼ⁻¹)` for `j < r`.
    pub fn with_genus_boundary(genus: usize, boundary: usize) -> Result<Self> {
        if boundary == 0 {
            return Err(Error::ClosedSurface);
        }
        let rank = 2 * genus + boundary - 1;
        if rank == 0 {
            return Err(Error::InvalidSurface(
                "the disk has trivial fundamental group".into(),
            ));
        }
        let mut sigma = Vec::with_capacity(2 * rank);
        for i in 0..genus {
            let (a, b) = (Letter::generator(2 * i), Letter::generator(2 * i + 1));
            sigma.extend([a, b, a.inverse(), b.inverse()]);
        }
        for j in 0..boundary - 1 {
            let c = Letter::generator(2 * genus + j);
            sigma.extend([c, c.inverse()]);
        }
        Self::new(sigma)
    }

    pub fn rank(&self) -> usize {
        self.sigma.len() / 2
    }

    pub fn sigma(&self) -> &[Letter] {
        &self.sigma
    }

    pub fn position(&self, d: Letter) -> usize {
        self.positions[d.slot()]
    }

    /// Steps from `from` to `to` in the positive direction, in `0..2n`.
    pub fn distance(&self, from: Letter, to: Letter) -> usize {
        let m = self.sigma.len();
        (self.position(to) + m - self.position(from)) % m
    }

    /// Number of boundary components of the thickened rose.
    pub fn boundary_components(&self) -> usize {
        let m = self.sigma.len();
        let mut seen = vec![false; m];
        let mut faces = 0;
        for start in 0..m {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut slot = start;
            while !seen[slot] {
                seen[slot] = true;
                // run along the band, then turn to the next direction
                let back = Letter::from_slot(slot).inverse();
                slot = self.sigma[(self.position(back) + 1) % m].slot();
            }
        }
        faces
    }

    pub fn genus(&self) -> usize {
        (1 + self.rank() - self.boundary_components()) / 2
    }

    /// The same surface with the opposite orientation.
    pub fn reversed(&self) -> Self {
        let mut sigma = self.sigma.clone();
        sigma.reverse();
        Self::new(sigma).expect("reversal preserves validity")
    }

    /// Rejects words using generators beyond the rank; `generator_bound` is
    /// the 1-based number of the largest generator used.
    pub fn check_generator(&self, generator_bound: usize) -> Result<()> {
        if generator_bound > self.rank() {
            return Err(Error::GeneratorOutOfRange {
                generator: generator_bound,
                rank: self.rank(),
            });
        }
        Ok(())
    }
}

/// The circular orders of `a, A, b, B` up to rotation and orientation
/// reversal, one representative each.
pub fn enumerate_rank2_roses() -> Vec<RibbonRose> {
    let a = Letter::generator(0);
    let b = Letter::generator(1);
    let rest = [a.inverse(), b, b.inverse()];
    // reversing a cut order `a x y z` gives `a z y x`, which swaps b and B
    [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ]
    .into_iter()
    .map(|perm| {
        let mut sigma = vec![a];
        sigma.extend(perm.iter().map(|&i| rest[i]));
        RibbonRose::new(sigma).expect("permutation of all directions")
    })
    .filter(|rose| rose.position(b) < rose.position(b.inverse()))
    .collect()
}

pub fn parse_surface(spec: &str) -> Result<RibbonRose> {
    spec.parse()
}

impl FromStr for RibbonRose {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        match spec {
            "pants" => return Ok(Self::pants()),
            "torus1" => return Ok(Self::torus1()),
            _ => {}
        }
        if let Some(body) = spec.strip_prefix("rose:") {
            let offset = spec.len() - body.len();
            let mut sigma = Vec::new();
            let mut pos = offset;
            for item in body.split(',') {
                let letters = parse_letters(item).map_err(|e| match e {
                    Error::Parse { position, message } => Error::Parse {
                        position: pos + position,
                        message,
                    },
                    other => other,
                })?;
                if letters.len() != 1 {
                    return Err(Error::parse(
                        pos,
                        format!("expected one direction, got {item:?}"),
                    ));
                }
                sigma.push(letters[0]);
                pos += item.len() + 1;
            }
            return RibbonRose::new(sigma);
        }
        if spec.starts_with("genus=") {
            let mut genus = None;
            let mut boundary = None;
            for field in spec.split(',') {
                let (key, value) = field
                    .split_once('=')
                    .ok_or_else(|| Error::InvalidSurface(format!("bad field {field:?}")))?;
                let value: usize = value
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidSurface(format!("bad number in {field:?}")))?;
                match key.trim() {
                    "genus" => genus = Some(value),
                    "boundary" => boundary = Some(value),
                    other => return Err(Error::InvalidSurface(format!("unknown field {other:?}"))),
                }
            }
            let (Some(g), Some(r)) = (genus, boundary) else {
                return Err(Error::InvalidSurface("need both genus and boundary".into()));
            };
            return RibbonRose::with_genus_boundary(g, r);
        }
        Err(Error::InvalidSurface(format!(
            "unrecognised surface {spec:?}; expected rose:..., pants, torus1 or genus=g,boundary=r"
        )))
    }
}

impl fmt::Display for RibbonRose {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rose:")?;
        for (i, d) in self.sigma.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}
