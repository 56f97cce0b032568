use std::fmt;

use serde::Serialize;

use super::GroupElement;
use crate::coretree::Dyadic;

/// A dyadic piecewise-linear homeomorphism of `[0, 1]`, stored as its
/// breakpoints. Only genuine breakpoints (slope changes) are kept, so two
/// maps are equal iff their breakpoint lists are identical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PLMap {
    points: Vec<(Dyadic, Dyadic)>,
    // log2 of the slope on each segment
    slopes: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid PL map: {0}")]
pub struct PLMapError(String);

impl PLMap {
    pub fn identity() -> Self {
        PLMap {
            points: vec![
                (Dyadic::zero(), Dyadic::zero()),
                (Dyadic::one(), Dyadic::one()),
            ],
            slopes: vec![0],
        }
    }

    /// Builds a map through the given points, checking monotonicity, fixed
    /// endpoints and power-of-two slopes. Redundant points are dropped.
    pub fn from_points(points: Vec<(Dyadic, Dyadic)>) -> Result<Self, PLMapError> {
        let first = points
            .first()
            .ok_or_else(|| PLMapError("no points".into()))?;
        let last = points.last().expect("non-empty");
        if !first.0.is_zero() || !first.1.is_zero() {
            return Err(PLMapError("does not fix 0".into()));
        }
        if !last.0.is_one() || !last.1.is_one() {
            return Err(PLMapError("does not fix 1".into()));
        }
        let mut slopes = Vec::with_capacity(points.len() - 1);
        for w in points.windows(2) {
            let (x0, y0) = &w[0];
            let (x1, y1) = &w[1];
            if x1 <= x0 || y1 <= y0 {
                return Err(PLMapError(format!("not increasing at x = {x0}")));
            }
            let s = y1
                .sub(y0)
                .log2_ratio(&x1.sub(x0))
                .ok_or_else(|| PLMapError(format!("slope after x = {x0} is not a power of 2")))?;
            slopes.push(s);
        }
        Ok(Self::simplified(points, slopes))
    }

    fn simplified(points: Vec<(Dyadic, Dyadic)>, slopes: Vec<i64>) -> Self {
        let n = points.len();
        let mut points = points.into_iter();
        let mut kept_points = vec![points.next().expect("at least two points")];
        let mut kept_slopes = vec![slopes[0]];
        for (i, p) in points.enumerate().map(|(i, p)| (i + 1, p)) {
            if i == n - 1 {
                kept_points.push(p);
            } else if slopes[i] != slopes[i - 1] {
                kept_points.push(p);
                kept_slopes.push(slopes[i]);
            }
        }
        PLMap {
            points: kept_points,
            slopes: kept_slopes,
        }
    }

    pub fn breakpoints(&self) -> &[(Dyadic, Dyadic)] {
        &self.points
    }

    /// log2 of the slope on each segment between consecutive breakpoints.
    pub fn slope_exponents(&self) -> &[i64] {
        &self.slopes
    }

    pub fn apply(&self, x: &Dyadic) -> Dyadic {
        let i = self
            .points
            .partition_point(|(px, _)| px <= x)
            .saturating_sub(1)
            .min(self.slopes.len() - 1);
        let (x0, y0) = &self.points[i];
        y0.add(&x.sub(x0).mul_pow2(self.slopes[i]))
    }

    pub fn inverse(&self) -> PLMap {
        PLMap {
            points: self
                .points
                .iter()
                .map(|(x, y)| (y.clone(), x.clone()))
                .collect(),
            slopes: self.slopes.iter().map(|s| -s).collect(),
        }
    }

    /// `self` followed by `then`: `x -> then(self(x))`.
    pub fn then(&self, then: &PLMap) -> PLMap {
        let inv = self.inverse();
        let mut xs: Vec<Dyadic> = self.points.iter().map(|(x, _)| x.clone()).collect();
        xs.extend(then.points.iter().map(|(x, _)| inv.apply(x)));
        xs.sort();
        xs.dedup();
        let points: Vec<(Dyadic, Dyadic)> = xs
            .into_iter()
            .map(|x| {
                let y = then.apply(&self.apply(&x));
                (x, y)
            })
            .collect();
        let slopes = points
            .windows(2)
            .map(|w| {
                w[1].1
                    .sub(&w[0].1)
                    .log2_ratio(&w[1].0.sub(&w[0].0))
                    .expect("composite of dyadic PL maps has power-of-two slopes")
            })
            .collect();
        Self::simplified(points, slopes)
    }
}

pub fn pl_of_element(f: &GroupElement) -> PLMap {
    let dom = f.domain().partition_of_leaves();
    let ran = f.range().partition_of_leaves();
    let mut points = Vec::with_capacity(dom.len() + 1);
    points.push((Dyadic::zero(), Dyadic::zero()));
    for (d, r) in dom.iter().zip(&ran) {
        points.push((d.right_end(), r.right_end()));
    }
    PLMap::from_points(points).expect("leaf partitions define a PL homeomorphism")
}

pub fn pl_apply(m: &PLMap, x: &Dyadic) -> Dyadic {
    m.apply(x)
}

/// `x -> second(first(x))`.
pub fn pl_compose(first: &PLMap, second: &PLMap) -> PLMap {
    first.then(second)
}

impl fmt::Display for PLMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .points
            .iter()
            .map(|(x, y)| format!("({x},{y})"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Serialize)]
struct PointText {
    x: String,
    y: String,
}

impl Serialize for PLMap {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pts: Vec<PointText> = self
            .points
            .iter()
            .map(|(x, y)| PointText {
                x: x.to_string(),
                y: y.to_string(),
            })
            .collect();
        pts.serialize(serializer)
    }
}
