use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{gcd, narrow};
use crate::error::{Error, Result};

/// A reduced fraction `num/den` with `den >= 1`.
///
/// Arithmetic is checked; see the `try_*` methods.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        Self::from_i128(num as i128, den as i128)
    }

    pub const fn from_int(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    fn from_i128(num: i128, den: i128) -> Result<Self> {
        if den == 0 {
            return Err(Error::Degenerate("zero denominator".into()));
        }
        let g = num_integer::gcd(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        Ok(Rational { num: narrow(n, "rational")?, den: narrow(d, "rational")? })
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.num)
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn try_add(self, rhs: Rational) -> Result<Rational> {
        let n = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        Self::from_i128(n, self.den as i128 * rhs.den as i128)
    }

    pub fn try_sub(self, rhs: Rational) -> Result<Rational> {
        let n = self.num as i128 * rhs.den as i128 - rhs.num as i128 * self.den as i128;
        Self::from_i128(n, self.den as i128 * rhs.den as i128)
    }

    pub fn try_mul(self, rhs: Rational) -> Result<Rational> {
        // cross-reduce first so representable products never overflow i128
        let g1 = gcd(self.num, rhs.den).max(1);
        let g2 = gcd(rhs.num, self.den).max(1);
        let n = (self.num / g1) as i128 * (rhs.num / g2) as i128;
        let d = (self.den / g2) as i128 * (rhs.den / g1) as i128;
        Self::from_i128(n, d)
    }

    pub fn try_div(self, rhs: Rational) -> Result<Rational> {
        if rhs.num == 0 {
            return Err(Error::Degenerate("division by zero".into()));
        }
        self.try_mul(Rational { num: rhs.den, den: rhs.num }.normalized()?)
    }

    pub fn try_neg(self) -> Result<Rational> {
        Ok(Rational { num: super::neg(self.num)?, den: self.den })
    }

    pub fn try_mul_int(self, k: i64) -> Result<Rational> {
        self.try_mul(Rational::from_int(k))
    }

    pub fn floor(&self) -> i64 {
        num_integer::Integer::div_floor(&self.num, &self.den)
    }

    pub fn ceil(&self) -> i64 {
        num_integer::Integer::div_ceil(&self.num, &self.den)
    }

    fn normalized(self) -> Result<Rational> {
        Self::new(self.num, self.den)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let int = |x: &str| x.trim().parse::<i64>().map_err(|_| Error::parse(s, "expected integer or n/d"));
        match t.split_once('/') {
            None => Ok(Rational::from_int(int(t)?)),
            Some((n, d)) => {
                let d = int(d)?;
                if d == 0 {
                    return Err(Error::parse(s, "zero denominator"));
                }
                Rational::new(int(n)?, d)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
