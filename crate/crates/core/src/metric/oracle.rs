use std::collections::HashMap;

use rayon::prelude::*;

use super::ball::{neighbors, Ball};
use super::Limits;
use crate::element::{compose, evaluate_word, invert, CanonicalKey, GroupElement, Word};
use crate::error::{Error, Result};

/// Exact word lengths by bidirectional breadth-first search.
///
/// The forward side is a ball around the identity that is kept between
/// queries and grown on demand; the backward side is a fresh search around
/// each target. The first time the two sides meet, the smallest
/// `forward length + backward distance` over the meeting set is the length.
#[derive(Debug)]
pub struct LengthOracle {
    ball: Ball,
    limits: Limits,
}

impl LengthOracle {
    pub fn new(limits: Limits) -> Self {
        LengthOracle {
            ball: Ball::identity_only(),
            limits,
        }
    }

    /// Starts from an existing ball, e.g. one loaded from a cache file.
    pub fn with_ball(ball: Ball, limits: Limits) -> Self {
        LengthOracle { ball, limits }
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn ball(&self) -> &Ball {
        &self.ball
    }

    /// Grows the cached forward ball to at least `radius`.
    pub fn ensure_radius(&mut self, radius: usize) -> Result<&Ball> {
        while self.ball.radius() < radius {
            self.ball.grow(&self.limits)?;
        }
        Ok(&self.ball)
    }

    pub fn geodesic_length(&mut self, g: &GroupElement) -> Result<usize> {
        if let Some(l) = self.ball.length_of(g) {
            return Ok(l);
        }
        let mut backward: HashMap<CanonicalKey, u16> = HashMap::new();
        backward.insert(g.canonical_key(), 0);
        let mut frontier = vec![g.clone()];
        let mut depth: u16 = 0;
        loop {
            let forward_cost = self.ball.sphere(self.ball.radius()).len();
            let mut best: Option<usize> = None;
            if forward_cost <= frontier.len() {
                self.ball.grow(&self.limits)?;
                let r = self.ball.radius();
                for h in self.ball.sphere(r) {
                    if let Some(&db) = backward.get(&h.canonical_key()) {
                        best = Some(best.map_or(r + db as usize, |b| b.min(r + db as usize)));
                    }
                }
            } else {
                depth += 1;
                let candidates: Vec<[GroupElement; 4]> =
                    frontier.par_iter().map(neighbors).collect();
                let mut next = Vec::new();
                for h in candidates.into_iter().flatten() {
                    let key = h.canonical_key();
                    if backward.contains_key(&key) {
                        continue;
                    }
                    if let Some(lf) = self.ball.length_of_key(&key) {
                        let total = lf + depth as usize;
                        best = Some(best.map_or(total, |b| b.min(total)));
                    }
                    backward.insert(key, depth);
                    next.push(h);
                }
                frontier = next;
                if backward.len() + self.ball.len() > self.limits.max_members {
                    return Err(Error::ResourceLimit(format!(
                        "bidirectional search exceeded {} members",
                        self.limits.max_members
                    )));
                }
            }
            if let Some(b) = best {
                return Ok(b);
            }
        }
    }

    /// `|g^-1 h|`.
    pub fn cayley_distance(&mut self, g: &GroupElement, h: &GroupElement) -> Result<usize> {
        self.geodesic_length(&compose(&invert(g), h))
    }

    /// Largest distance between same-time prefixes of two words.
    pub fn fellow_traveler_constant(&mut self, w: &Word, v: &Word) -> Result<usize> {
        Ok(self
            .fellow_traveler_profile(w, v)?
            .into_iter()
            .max()
            .unwrap_or(0))
    }

    /// Distance between `w(t)` and `v(t)` for every `t` in `0..=max(|w|,|v|)`.
    pub fn fellow_traveler_profile(&mut self, w: &Word, v: &Word) -> Result<Vec<usize>> {
        let n = w.len().max(v.len());
        let mut out = Vec::with_capacity(n + 1);
        for t in 0..=n {
            let a = evaluate_word(&w.prefix(t));
            let b = evaluate_word(&v.prefix(t));
            out.push(self.cayley_distance(&a, &b)?);
        }
        Ok(out)
    }
}

impl Default for LengthOracle {
    fn default() -> Self {
        LengthOracle::new(Limits::from_env())
    }
}

pub fn geodesic_length(g: &GroupElement) -> Result<usize> {
    LengthOracle::default().geodesic_length(g)
}

pub fn cayley_distance(g: &GroupElement, h: &GroupElement) -> Result<usize> {
    LengthOracle::default().cayley_distance(g, h)
}

pub fn fellow_traveler_constant(w: &Word, v: &Word) -> Result<usize> {
    LengthOracle::default().fellow_traveler_constant(w, v)
}
