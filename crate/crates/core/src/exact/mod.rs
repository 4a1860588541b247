//! Exact integer, rational, slope and 2×2 matrix arithmetic.
//!
//! Everything is backed by `i64` with overflow checks; intermediate products
//! are formed in `i128` and narrowed on the way out, so a result is only
//! rejected when it is itself unrepresentable.

mod mat2;
mod rational;
mod slope;

pub use mat2::{det2, Mat2};
pub use rational::Rational;
pub use slope::{is_farey_neighbor, mediant_delta, Direction, Slope};

use crate::error::{Error, Result};

pub fn gcd(a: i64, b: i64) -> i64 {
    num_integer::gcd(a, b)
}

pub(crate) fn narrow(x: i128, ctx: &'static str) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow(ctx))
}

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow("add"))
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow("sub"))
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow("mul"))
}

pub(crate) fn neg(a: i64) -> Result<i64> {
    a.checked_neg().ok_or(Error::Overflow("neg"))
}

pub(crate) fn abs(a: i64) -> Result<i64> {
    a.checked_abs().ok_or(Error::Overflow("abs"))
}

/// `a*d - b*c`, the workhorse of every determinant in the crate.
pub(crate) fn cross(a: i64, b: i64, c: i64, d: i64) -> Result<i64> {
    narrow(a as i128 * d as i128 - b as i128 * c as i128, "determinant")
}

/// Modular inverse of `x` modulo `m` (m > 1), if it exists.
pub(crate) fn mod_inverse(x: i64, m: i64) -> Option<i64> {
    let e = num_integer::Integer::extended_gcd(&x.rem_euclid(m), &m);
    (e.gcd == 1).then(|| e.x.rem_euclid(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod() {
        assert_eq!(mod_inverse(5, 8), Some(5));
        assert_eq!(mod_inverse(4, 7), Some(2));
        assert_eq!(mod_inverse(4, 8), None);
        for m in 2..60 {
            for x in 1..m {
                if let Some(y) = mod_inverse(x, m) {
                    assert_eq!((x * y) % m, 1);
                } else {
                    assert_ne!(gcd(x, m), 1);
                }
            }
        }
    }

    #[test]
    fn checked_helpers_report_overflow() {
        assert_eq!(mul(i64::MAX, 2), Err(Error::Overflow("mul")));
        assert_eq!(neg(i64::MIN), Err(Error::Overflow("neg")));
        assert!(cross(i64::MAX, i64::MIN, i64::MAX, i64::MAX).is_err());
        assert_eq!(cross(3, 2, 1, 4).unwrap(), 10);
    }
}
