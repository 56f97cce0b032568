use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::ParseError;

/// An exact dyadic rational `numerator / 2^exponent` in `[0, 1]`.
///
/// Values are kept in lowest terms: the numerator is odd, except for the two
/// endpoints which are stored as `0/2^0` and `1/2^0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dyadic {
    numerator: BigUint,
    exponent: u64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            numerator: BigUint::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            numerator: BigUint::one(),
            exponent: 0,
        }
    }

    /// Builds `numerator / 2^exponent`, reducing to lowest terms.
    ///
    /// Returns `None` if the value lies outside `[0, 1]`.
    pub fn new(numerator: impl Into<BigUint>, exponent: u64) -> Option<Self> {
        let d = Self::reduced(numerator.into(), exponent);
        if d > Self::one() {
            None
        } else {
            Some(d)
        }
    }

    /// `numerator / 2^exponent` from machine integers. Panics outside `[0, 1]`.
    pub fn from_parts(numerator: u64, exponent: u64) -> Self {
        Self::new(numerator, exponent).expect("dyadic outside [0, 1]")
    }

    // Lowest terms without the range check; internal arithmetic may pass
    // through it with values it has already bounded.
    fn reduced(mut numerator: BigUint, mut exponent: u64) -> Self {
        if numerator.is_zero() {
            return Self::zero();
        }
        let tz = numerator.trailing_zeros().unwrap_or(0).min(exponent);
        if tz > 0 {
            numerator >>= tz;
            exponent -= tz;
        }
        Dyadic {
            numerator,
            exponent,
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0 && self.numerator.is_one()
    }

    /// Numerator rescaled to denominator `2^exp` (requires `exp >= self.exponent`).
    fn scaled_to(&self, exp: u64) -> BigUint {
        &self.numerator << (exp - self.exponent)
    }

    pub(crate) fn add(&self, other: &Dyadic) -> Dyadic {
        let e = self.exponent.max(other.exponent);
        Self::reduced(self.scaled_to(e) + other.scaled_to(e), e)
    }

    /// `self - other`; requires `self >= other`.
    pub(crate) fn sub(&self, other: &Dyadic) -> Dyadic {
        debug_assert!(self >= other);
        let e = self.exponent.max(other.exponent);
        Self::reduced(self.scaled_to(e) - other.scaled_to(e), e)
    }

    /// Multiplies by `2^power`.
    pub(crate) fn mul_pow2(&self, power: i64) -> Dyadic {
        if self.is_zero() {
            return self.clone();
        }
        if power >= 0 {
            let p = power as u64;
            if p <= self.exponent {
                Dyadic {
                    numerator: self.numerator.clone(),
                    exponent: self.exponent - p,
                }
            } else {
                Dyadic {
                    numerator: &self.numerator << (p - self.exponent),
                    exponent: 0,
                }
            }
        } else {
            Dyadic {
                numerator: self.numerator.clone(),
                exponent: self.exponent + power.unsigned_abs(),
            }
        }
    }

    /// `log2(self / other)` when the ratio is an integral power of two.
    pub(crate) fn log2_ratio(&self, other: &Dyadic) -> Option<i64> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        let (a, ea) = self.odd_parts();
        let (b, eb) = other.odd_parts();
        (a == b).then(|| eb - ea)
    }

    // (odd part, power-of-two exponent) with value = odd * 2^(-exp); the
    // exponent may be negative for values above 1.
    fn odd_parts(&self) -> (BigUint, i64) {
        let tz = self.numerator.trailing_zeros().unwrap_or(0);
        (&self.numerator >> tz, self.exponent as i64 - tz as i64)
    }

    /// Approximate value, for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        let n = self.numerator.to_f64().unwrap_or(f64::INFINITY);
        n / 2f64.powi(self.exponent.min(i32::MAX as u64) as i32)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        self.scaled_to(e).cmp(&other.scaled_to(e))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    /// `0`, `1`, or `numerator/2^exponent`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.exponent)
        }
    }
}

impl FromStr for Dyadic {
    type Err = ParseError;

    /// Accepts `a/2^b`, `a/d` with `d` a power of two, a plain integer, or a
    /// terminating decimal such as `0.625`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = |msg: &str| ParseError::new(0, format!("{msg}: {s:?}"));
        let value = if let Some((num, den)) = s.split_once('/') {
            let num: BigUint = num.trim().parse().map_err(|_| bad("bad numerator"))?;
            let den = den.trim();
            let exponent = if let Some(exp) = den.strip_prefix("2^") {
                exp.trim().parse::<u64>().map_err(|_| bad("bad exponent"))?
            } else {
                let d: BigUint = den.parse().map_err(|_| bad("bad denominator"))?;
                if d.is_zero() || d.count_ones() != 1 {
                    return Err(bad("denominator is not a power of two"));
                }
                d.trailing_zeros().unwrap_or(0)
            };
            Dyadic::new(num, exponent)
        } else if let Some((int, frac)) = s.split_once('.') {
            let digits = format!("{int}{frac}");
            let mut n: BigUint = digits.parse().map_err(|_| bad("bad decimal"))?;
            let m = frac.len() as u32;
            let five_m = BigUint::from(5u32).pow(m);
            if !(&n % &five_m).is_zero() {
                return Err(bad("decimal is not dyadic"));
            }
            n /= five_m;
            Dyadic::new(n, m as u64)
        } else {
            let n: BigUint = s.parse().map_err(|_| bad("bad dyadic"))?;
            Dyadic::new(n, 0)
        };
        value.ok_or_else(|| bad("dyadic outside [0, 1]"))
    }
}
