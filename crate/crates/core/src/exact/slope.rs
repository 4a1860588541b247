use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{cross, gcd, Rational};
use crate::error::{Error, Result};

/// A primitive integer vector with canonical sign: `u > 0`, or `(0, 1)`.
///
/// Curves on the Heegaard torus are written `u·μ₁ + v·λ₁`; the slope of the
/// direction is `v/u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Direction {
    pub u: i64,
    pub v: i64,
}

impl Direction {
    pub fn new(u: i64, v: i64) -> Result<Self> {
        if u == 0 && v == 0 {
            return Err(Error::Degenerate("zero direction".into()));
        }
        let g = gcd(u, v);
        let (mut u, mut v) = (u / g, v / g);
        if u < 0 || (u == 0 && v < 0) {
            u = super::neg(u)?;
            v = super::neg(v)?;
        }
        Ok(Direction { u, v })
    }

    pub fn slope(&self) -> Slope {
        Slope { n: self.v, d: self.u }
    }
}

/// A projective rational slope `n/d`, `d >= 0`, with `(1, 0)` the point at
/// infinity; −∞ and +∞ denote the same point.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    n: i64,
    d: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { n: 1, d: 0 };

    pub fn new(n: i64, d: i64) -> Result<Self> {
        // same canonical form as a direction (d, n)
        Ok(Direction::new(d, n)?.slope())
    }

    /// The slope `−p/q`; `(1, 0)` gives −∞.
    pub fn neg_frac(p: i64, q: i64) -> Result<Self> {
        Slope::new(super::neg(p)?, q)
    }

    pub fn numer(&self) -> i64 {
        self.n
    }

    pub fn denom(&self) -> i64 {
        self.d
    }

    pub fn is_infinite(&self) -> bool {
        self.d == 0
    }

    pub fn direction(&self) -> Direction {
        Direction { u: self.d, v: self.n }
    }

    /// `(p, q)` such that the slope is `−p/q`, with `(1, 0)` for ∞.
    pub fn as_neg_frac(&self) -> (i64, i64) {
        if self.is_infinite() {
            (1, 0)
        } else {
            (-self.n, self.d)
        }
    }

    pub fn to_rational(&self) -> Option<Rational> {
        (!self.is_infinite()).then(|| Rational::new(self.n, self.d).expect("reduced slope"))
    }

    /// Order on the chart `[−∞, 0]` (extended to all finite slopes), where
    /// ∞ is read as −∞. Comparing ∞ with a positive slope is rejected.
    pub fn chart_cmp(&self, other: &Slope) -> Result<Ordering> {
        match (self.to_rational(), other.to_rational()) {
            (Some(x), Some(y)) => Ok(x.cmp(&y)),
            (None, None) => Ok(Ordering::Equal),
            (None, Some(y)) | (Some(y), None) if y.num() > 0 => Err(Error::InvalidComparison(format!(
                "∞ and {y} are not comparable on the chart [-inf, 0]"
            ))),
            (None, Some(_)) => Ok(Ordering::Less),
            (Some(_), None) => Ok(Ordering::Greater),
        }
    }

    /// Display on the `[−∞, 0]` chart: ∞ prints as `-inf`.
    pub fn chart(&self) -> ChartSlope<'_> {
        ChartSlope(self)
    }
}

impl From<Rational> for Slope {
    fn from(x: Rational) -> Self {
        Slope { n: x.num(), d: x.den() }
    }
}

pub struct ChartSlope<'a>(&'a Slope);

impl fmt::Display for ChartSlope<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_infinite() {
            f.write_str("-inf")
        } else {
            fmt::Display::fmt(self.0, f)
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            0 => f.write_str("inf"),
            1 => write!(f, "{}", self.n),
            d => write!(f, "{}/{}", self.n, d),
        }
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "-inf" | "+inf" => Ok(Slope::INFINITY),
            t => match t.split_once('/') {
                Some((n, d)) => {
                    let n = n.trim().parse().map_err(|_| Error::parse(s, "bad numerator"))?;
                    let d = d.trim().parse().map_err(|_| Error::parse(s, "bad denominator"))?;
                    Slope::new(n, d).map_err(|_| Error::parse(s, "0/0 is not a slope"))
                }
                None => Ok(Slope::from(Rational::from_int(
                    t.parse().map_err(|_| Error::parse(s, "expected n/d, integer or inf"))?,
                ))),
            },
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.chart())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// True iff the canonical directions of `x` and `y` span ℤ².
pub fn is_farey_neighbor(x: Slope, y: Slope) -> bool {
    let (a, b) = (x.direction(), y.direction());
    matches!(cross(a.u, b.u, a.v, b.v), Ok(1) | Ok(-1))
}

/// The delta slope `−(p₊−p₋)/(q₊−q₋)` of a hop from `−p₋/q₋` to `−p₊/q₊`.
pub fn mediant_delta(x: Slope, y: Slope) -> Result<Slope> {
    let (p0, q0) = x.as_neg_frac();
    let (p1, q1) = y.as_neg_frac();
    let dp = super::sub(p1, p0)?;
    let dq = super::sub(q1, q0)?;
    if dp == 0 && dq == 0 {
        return Err(Error::Degenerate(format!("hop {x} -> {y} has no delta slope")));
    }
    Slope::neg_frac(dp, dq)
}
