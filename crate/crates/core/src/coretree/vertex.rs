use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Dyadic;
use crate::error::{Error, ParseError};

/// The interval `[a/2^n, (a+1)/2^n]` inside `[0, 1]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardInterval {
    a: BigUint,
    n: u64,
}

impl StandardInterval {
    /// Returns `None` unless `a <= 2^n - 1`.
    pub fn new(a: impl Into<BigUint>, n: u64) -> Option<Self> {
        let a = a.into();
        (a < (BigUint::one() << n)).then_some(StandardInterval { a, n })
    }

    pub fn unit() -> Self {
        StandardInterval {
            a: BigUint::zero(),
            n: 0,
        }
    }

    pub fn a(&self) -> &BigUint {
        &self.a
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn left_end(&self) -> Dyadic {
        Dyadic::new(self.a.clone(), self.n).expect("interval inside [0, 1]")
    }

    pub fn right_end(&self) -> Dyadic {
        Dyadic::new(&self.a + 1u32, self.n).expect("interval inside [0, 1]")
    }

    /// The dyadic label `(2a+1) / 2^(n+1)` of the vertex carrying this interval.
    pub fn midpoint(&self) -> Dyadic {
        Dyadic::new((&self.a << 1) + 1u32, self.n + 1).expect("midpoint inside [0, 1]")
    }

    /// Builds the interval spanned by two dyadic endpoints, if it is standard.
    pub fn from_endpoints(lo: &Dyadic, hi: &Dyadic) -> Option<Self> {
        if lo >= hi {
            return None;
        }
        let width = hi.sub(lo);
        if !width.numerator().is_one() {
            return None;
        }
        let n = width.exponent();
        // lo must be a multiple of 2^-n
        if lo.exponent() > n {
            return None;
        }
        let a = lo.numerator() << (n - lo.exponent());
        StandardInterval::new(a, n)
    }
}

impl fmt::Display for StandardInterval {
    /// `[a/2^n,(a+1)/2^n]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}/2^{},{}/2^{}]",
            self.a,
            self.n,
            &self.a + 1u32,
            self.n
        )
    }
}

impl FromStr for StandardInterval {
    type Err = ParseError;

    /// Accepts `[lo,hi]` with any dyadic syntax for the endpoints.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| ParseError::new(0, format!("expected [lo,hi], got {s:?}")))?;
        let (lo, hi) = inner
            .split_once(',')
            .ok_or_else(|| ParseError::new(1, format!("missing comma in {s:?}")))?;
        let lo: Dyadic = lo.parse()?;
        let hi: Dyadic = hi.parse()?;
        StandardInterval::from_endpoints(&lo, &hi)
            .ok_or_else(|| ParseError::new(0, format!("{s:?} is not a standard dyadic interval")))
    }
}

/// A vertex of the infinite binary tree, as the path from the root.
/// `false` steps to the left child, `true` to the right child.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct VertexAddress(Vec<bool>);

impl VertexAddress {
    pub fn root() -> Self {
        VertexAddress(Vec::new())
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        VertexAddress(bits)
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, right: bool) -> Self {
        let mut bits = self.0.clone();
        bits.push(right);
        VertexAddress(bits)
    }

    pub fn left(&self) -> Self {
        self.child(false)
    }

    pub fn right(&self) -> Self {
        self.child(true)
    }

    pub fn is_prefix_of(&self, other: &VertexAddress) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn common_prefix_len(&self, other: &VertexAddress) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .take_while(|(a, b)| a == b)
            .count()
    }

    /// `[0, 1/2^depth]`, the vertex at `depth` on the left spine.
    pub fn left_spine(depth: usize) -> Self {
        VertexAddress(vec![false; depth])
    }

    /// `[1 - 1/2^depth, 1]`.
    pub fn right_spine(depth: usize) -> Self {
        VertexAddress(vec![true; depth])
    }

    /// The pivot vertex `[1/2, 1]`.
    pub fn pivot() -> Self {
        VertexAddress(vec![true])
    }

    pub fn to_interval(&self) -> StandardInterval {
        address_to_interval(self)
    }

    pub fn midpoint(&self) -> Dyadic {
        self.to_interval().midpoint()
    }

    pub fn region(&self) -> RegionClass {
        region_of(self)
    }
}

impl fmt::Display for VertexAddress {
    /// Bits as `0`/`1` characters, `0` meaning left; the root is empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for VertexAddress {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "root" {
            return Ok(VertexAddress::root());
        }
        t.char_indices()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(ParseError::new(
                    i,
                    format!("unexpected {c:?} in vertex address"),
                )),
            })
            .collect::<Result<_, _>>()
            .map(VertexAddress)
    }
}

impl Serialize for VertexAddress {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexAddress {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which part of the tree a vertex lies in. The root counts as left spine.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum RegionClass {
    LeftSpine,
    RightSpine,
    Interior,
}

impl RegionClass {
    pub fn is_exterior(self) -> bool {
        !matches!(self, RegionClass::Interior)
    }
}

pub fn address_to_interval(v: &VertexAddress) -> StandardInterval {
    let mut a = BigUint::zero();
    for &b in v.bits() {
        a <<= 1;
        if b {
            a += 1u32;
        }
    }
    StandardInterval {
        a,
        n: v.depth() as u64,
    }
}

pub fn interval_to_address(interval: &StandardInterval) -> VertexAddress {
    let n = interval.n;
    VertexAddress((0..n).rev().map(|i| interval.a.bit(i)).collect())
}

/// The unique vertex whose interval has midpoint `d`; `d` must lie in `(0, 1)`.
pub fn vertex_of_midpoint(d: &Dyadic) -> Result<VertexAddress, Error> {
    if d.is_zero() || d.is_one() {
        return Err(Error::NotAMidpoint(d.to_string()));
    }
    // d = (2a+1) / 2^(n+1)
    let n = d.exponent() - 1;
    let a = d.numerator() >> 1u32;
    Ok(interval_to_address(&StandardInterval { a, n }))
}

/// Infix order on vertices, computed directly from addresses.
pub fn infix_compare(u: &VertexAddress, v: &VertexAddress) -> Ordering {
    let p = u.common_prefix_len(v);
    match (u.bits().get(p), v.bits().get(p)) {
        (None, None) => Ordering::Equal,
        (Some(&ub), Some(_)) => {
            if ub {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
        // v lies below u: v is left of u iff it went left
        (None, Some(&vb)) => {
            if vb {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        (Some(&ub), None) => {
            if ub {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
    }
}

pub fn region_of(v: &VertexAddress) -> RegionClass {
    let bits = v.bits();
    if bits.iter().all(|&b| !b) {
        RegionClass::LeftSpine
    } else if bits.iter().all(|&b| b) {
        RegionClass::RightSpine
    } else {
        RegionClass::Interior
    }
}

/// Number of edges on the tree path between `u` and `v`.
pub fn tree_distance(u: &VertexAddress, v: &VertexAddress) -> usize {
    u.depth() + v.depth() - 2 * u.common_prefix_len(v)
}
