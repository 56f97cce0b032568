use std::collections::HashMap;
use std::io::{BufRead, Write};

use rayon::prelude::*;

use super::Limits;
use crate::element::{compose, generator_element, CanonicalKey, Generator, GroupElement};
use crate::error::{Error, Result};

pub const CACHE_HEADER: &str = "thompson-ball v1";

/// All elements within a given word-metric radius of the identity, with
/// their exact lengths, in breadth-first order.
///
/// Each layer lists the new elements in the order their first discoverer
/// appears in the previous layer, generators taken in the order
/// `x0, x1, x0^-1, x1^-1`; the result does not depend on thread count.
#[derive(Clone, Debug)]
pub struct Ball {
    elements: Vec<GroupElement>,
    lengths: Vec<u16>,
    index: HashMap<CanonicalKey, u32>,
    // layer_starts[l] is the index of the first element of length l
    layer_starts: Vec<usize>,
}

/// Right multiplication by each generator.
pub(crate) fn neighbors(g: &GroupElement) -> [GroupElement; 4] {
    Generator::ALL.map(|s| compose(g, &generator_element(s)))
}

impl Ball {
    pub fn identity_only() -> Self {
        let e = GroupElement::identity();
        let mut index = HashMap::new();
        index.insert(e.canonical_key(), 0);
        Ball {
            elements: vec![e],
            lengths: vec![0],
            index,
            layer_starts: vec![0],
        }
    }

    pub fn build(radius: usize, limits: &Limits) -> Result<Self> {
        if radius > limits.max_radius {
            return Err(Error::ResourceLimit(format!(
                "radius {radius} exceeds the configured maximum {}",
                limits.max_radius
            )));
        }
        let mut ball = Ball::identity_only();
        while ball.radius() < radius {
            ball.grow(limits)?;
        }
        Ok(ball)
    }

    pub fn radius(&self) -> usize {
        self.layer_starts.len() - 1
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements of length exactly `l`.
    pub fn sphere(&self, l: usize) -> &[GroupElement] {
        match (self.layer_starts.get(l), self.layer_starts.get(l + 1)) {
            (Some(&a), Some(&b)) => &self.elements[a..b],
            (Some(&a), None) => &self.elements[a..],
            _ => &[],
        }
    }

    pub fn sphere_sizes(&self) -> Vec<usize> {
        (0..=self.radius()).map(|l| self.sphere(l).len()).collect()
    }

    pub fn length_of_key(&self, key: &CanonicalKey) -> Option<usize> {
        self.index
            .get(key)
            .map(|&i| self.lengths[i as usize] as usize)
    }

    pub fn length_of(&self, g: &GroupElement) -> Option<usize> {
        self.length_of_key(&g.canonical_key())
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.contains_key(&g.canonical_key())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GroupElement, usize)> {
        self.elements
            .iter()
            .zip(&self.lengths)
            .map(|(g, &l)| (g, l as usize))
    }

    pub fn keys(&self) -> impl Iterator<Item = &CanonicalKey> {
        self.index.keys()
    }

    /// Adds the next sphere. Returns the index of its first element.
    pub fn grow(&mut self, limits: &Limits) -> Result<usize> {
        let r = self.radius();
        if r + 1 > u16::MAX as usize {
            return Err(Error::ResourceLimit(
                "radius overflows the length type".into(),
            ));
        }
        let frontier = self.sphere(r);
        let candidates: Vec<[GroupElement; 4]> = frontier.par_iter().map(neighbors).collect();
        let start = self.elements.len();
        for nbrs in candidates {
            for h in nbrs {
                let key = h.canonical_key();
                if self.index.contains_key(&key) {
                    continue;
                }
                if self.elements.len() >= limits.max_members {
                    return Err(Error::ResourceLimit(format!(
                        "ball exceeds {} members while building radius {}",
                        limits.max_members,
                        r + 1
                    )));
                }
                self.index.insert(key, self.elements.len() as u32);
                self.elements.push(h);
                self.lengths.push((r + 1) as u16);
            }
        }
        self.layer_starts.push(start);
        Ok(start)
    }

    /// The sub-ball of radius `r` (`r` must not exceed this ball's radius).
    pub fn restricted(&self, r: usize) -> Ball {
        let r = r.min(self.radius());
        let end = self
            .layer_starts
            .get(r + 1)
            .copied()
            .unwrap_or(self.elements.len());
        let elements = self.elements[..end].to_vec();
        let lengths = self.lengths[..end].to_vec();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.canonical_key(), i as u32))
            .collect();
        Ball {
            elements,
            lengths,
            index,
            layer_starts: self.layer_starts[..=r].to_vec(),
        }
    }

    /// Cache format: a header line `thompson-ball v1 radius=R`, then one
    /// `hexkey length` line per element in breadth-first order.
    pub fn write_cache<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{CACHE_HEADER} radius={}", self.radius())?;
        for (g, l) in self.iter() {
            writeln!(out, "{} {}", g.canonical_key().to_hex(), l)?;
        }
        Ok(())
    }

    pub fn read_cache<R: BufRead>(input: R) -> Result<Ball> {
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Cache("empty file".into()))??;
        let radius: usize = header
            .strip_prefix(CACHE_HEADER)
            .and_then(|r| r.trim().strip_prefix("radius="))
            .and_then(|r| r.parse().ok())
            .ok_or_else(|| Error::Cache(format!("bad header {header:?}")))?;
        let mut ball = Ball {
            elements: Vec::new(),
            lengths: Vec::new(),
            index: HashMap::new(),
            layer_starts: Vec::new(),
        };
        for (n, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let bad = |what: &str| Error::Cache(format!("line {}: {what}", n + 2));
            let (hex, len) = line
                .split_once(' ')
                .ok_or_else(|| bad("expected `hexkey length`"))?;
            let key = CanonicalKey::from_hex(hex)?;
            let len: u16 = len.trim().parse().map_err(|_| bad("bad length"))?;
            let expected = ball.layer_starts.len().saturating_sub(1) as u16;
            if ball.elements.is_empty() {
                if len != 0 {
                    return Err(bad("first entry must be the identity"));
                }
                ball.layer_starts.push(0);
            } else if len == expected + 1 {
                ball.layer_starts.push(ball.elements.len());
            } else if len != expected {
                return Err(bad("entries are not in breadth-first order"));
            }
            let g = GroupElement::from_key(&key)?;
            if ball.index.insert(key, ball.elements.len() as u32).is_some() {
                return Err(bad("duplicate element"));
            }
            ball.elements.push(g);
            ball.lengths.push(len);
        }
        if ball.radius_checked() != Some(radius) {
            return Err(Error::Cache(format!(
                "header says radius {radius} but entries reach {:?}",
                ball.radius_checked()
            )));
        }
        Ok(ball)
    }

    fn radius_checked(&self) -> Option<usize> {
        self.layer_starts.len().checked_sub(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_balls() {
        let limits = Limits::default();
        let b0 = Ball::build(0, &limits).unwrap();
        assert_eq!(b0.len(), 1);
        assert!(b0.sphere(0)[0].is_identity());
        let b1 = Ball::build(1, &limits).unwrap();
        assert_eq!(b1.sphere_sizes(), vec![1, 4]);
        for g in Generator::ALL {
            assert_eq!(b1.length_of(&generator_element(g)), Some(1));
        }
    }

    #[test]
    fn limits_enforced() {
        let limits = Limits {
            max_radius: 3,
            max_members: 10,
        };
        assert!(matches!(
            Ball::build(4, &limits),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(
            Ball::build(2, &limits),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn cache_roundtrip() {
        let ball = Ball::build(3, &Limits::default()).unwrap();
        let mut buf = Vec::new();
        ball.write_cache(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("thompson-ball v1 radius=3\n"));
        let back = Ball::read_cache(&buf[..]).unwrap();
        assert_eq!(back.sphere_sizes(), ball.sphere_sizes());
        for (g, l) in ball.iter() {
            assert_eq!(back.length_of(g), Some(l));
        }
    }

    #[test]
    fn cache_rejects_garbage() {
        assert!(Ball::read_cache(&b""[..]).is_err());
        assert!(Ball::read_cache(&b"thompson-ball v2 radius=0\n"[..]).is_err());
        let id = GroupElement::identity().canonical_key().to_hex();
        let ok = format!("thompson-ball v1 radius=0\n{id} 0\n");
        assert_eq!(Ball::read_cache(ok.as_bytes()).unwrap().len(), 1);
        let wrong_radius = format!("thompson-ball v1 radius=2\n{id} 0\n");
        assert!(Ball::read_cache(wrong_radius.as_bytes()).is_err());
        let dup = format!("thompson-ball v1 radius=0\n{id} 0\n{id} 0\n");
        assert!(Ball::read_cache(dup.as_bytes()).is_err());
    }
}
