//! Lens spaces `L(p,q)`, their standard gluing data and the duality
//! `L(p,q) = L(p, p−p')`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{self, gcd, Mat2, Rational};

/// `L(p,q)` with `p > q >= 1`, together with the unique companion pair
/// `(p', q')` satisfying `p > p' > 0`, `q >= q' > 0`, `p·q' − p'·q = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LensSpace {
    pub p: i64,
    pub q: i64,
    #[serde(rename = "p_prime")]
    pub p_std: i64,
    #[serde(rename = "q_prime")]
    pub q_std: i64,
}

impl LensSpace {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        normalize_lens(p, q)
    }

    /// The standard gluing matrix `[[−q, q'], [p, −p']]`.
    pub fn gluing_matrix(&self) -> Mat2 {
        Mat2::new(-self.q, self.q_std, self.p, -self.p_std)
    }

    /// `p/q` as a rational.
    pub fn ratio(&self) -> Rational {
        Rational::new(self.p, self.q).expect("valid lens")
    }

    /// `p'/q'` as a rational.
    pub fn std_ratio(&self) -> Rational {
        Rational::new(self.p_std, self.q_std).expect("valid lens")
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

pub fn normalize_lens(p: i64, q: i64) -> Result<LensSpace> {
    let invalid = |reason| Err(Error::InvalidLens { p, q, reason });
    if q < 1 {
        return invalid("q must be at least 1");
    }
    if p <= q {
        return invalid("p must exceed q");
    }
    if gcd(p, q) != 1 {
        return invalid("p and q must be coprime");
    }
    // p'·q ≡ −1 (mod p)
    let inv = exact::mod_inverse(q, p).expect("coprime");
    let p_std = p - inv;
    let q_std = exact::narrow((1 + p_std as i128 * q as i128) / p as i128, "standard pair")?;
    debug_assert_eq!(p as i128 * q_std as i128 - p_std as i128 * q as i128, 1);
    Ok(LensSpace { p, q, p_std, q_std })
}

/// The dual presentation `L(p, p−p')` and the coordinate transition matrix
/// `[[−(p−p'), −(q−q')], [p, q]]` from `(μ₁, λ₁)` to the new coordinates.
pub fn dual_lens(l: &LensSpace) -> Result<(LensSpace, Mat2)> {
    let dual = normalize_lens(l.p, l.p - l.p_std)?;
    let m = Mat2::new(-(l.p - l.p_std), -(l.q - l.q_std), l.p, l.q);
    Ok((dual, m))
}

/// An oriented `(a,b)` torus knot class `a·μ₁ + b·λ₁`.
///
/// Negative knots are stored in the presentation `a <= 0 <= b`; a class given
/// with both signs reversed is stored negated with `orientation_flipped` set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KnotClass {
    pub a: i64,
    pub b: i64,
    pub orientation_flipped: bool,
}

impl KnotClass {
    /// Accepts any coprime pair; pairs with `a·b > 0` are positive torus knots
    /// and are kept as given (see [`KnotClass::is_positive`]).
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a == 0 && b == 0 {
            return Err(Error::InvalidKnot { a, b, reason: "zero class" });
        }
        if gcd(a, b) != 1 {
            return Err(Error::InvalidKnot { a, b, reason: "a and b must be coprime" });
        }
        let negative = a <= 0 && b >= 0;
        let reversed = a >= 0 && b <= 0;
        if reversed && !negative {
            Ok(KnotClass { a: exact::neg(a)?, b: exact::neg(b)?, orientation_flipped: true })
        } else {
            Ok(KnotClass { a, b, orientation_flipped: false })
        }
    }

    pub fn is_positive(&self) -> bool {
        (self.a > 0 && self.b > 0) || (self.a < 0 && self.b < 0)
    }

    /// The pair as the user wrote it.
    pub fn literal(&self) -> (i64, i64) {
        if self.orientation_flipped {
            (-self.a, -self.b)
        } else {
            (self.a, self.b)
        }
    }

    /// `b/a`, or `None` for the fiber class `a = 0`.
    pub fn slope(&self) -> Option<Rational> {
        (self.a != 0).then(|| Rational::new(self.b, self.a).expect("a != 0"))
    }
}

impl fmt::Display for KnotClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.literal();
        write!(f, "({a},{b})")
    }
}

/// Result of [`transform_knot`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TransformedKnot {
    pub space: LensSpace,
    pub knot: KnotClass,
    /// `(ã, b̃)` before the sign normalization.
    pub raw: (i64, i64),
    pub rational_unknot: bool,
}

/// Rewrites a knot with `b/a ∈ (−p/q, −p'/q')` in the coordinates of the dual
/// presentation, where its slope lands in `(−1, 0)`.
pub fn transform_knot(l: &LensSpace, k: &KnotClass) -> Result<TransformedKnot> {
    let in_range = match k.slope() {
        Some(x) if k.a < 0 && k.b > 0 => {
            x.try_neg()? < l.ratio() && x.try_neg()? > l.std_ratio()
        }
        _ => false,
    };
    if !in_range {
        return Err(Error::WrongCase(format!(
            "slope of {k} is not in (-{}/{}, -{}/{})",
            l.p, l.q, l.p_std, l.q_std
        )));
    }
    let (dual, m) = dual_lens(l)?;
    let (ta, tb) = m.apply(k.a, k.b)?;
    if !(ta > 0 && tb < 0) {
        return Err(Error::InvariantViolation(format!(
            "dual coordinates ({ta},{tb}) of {k} in {l} have unexpected signs"
        )));
    }
    let knot = KnotClass {
        a: exact::neg(ta)?,
        b: exact::neg(tb)?,
        orientation_flipped: !k.orientation_flipped,
    };
    Ok(TransformedKnot { space: dual, knot, raw: (ta, tb), rational_unknot: knot.b == 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive search for the standard pair; independent of `normalize_lens`.
    fn scan(p: i64, q: i64) -> Vec<(i64, i64)> {
        let mut out = vec![];
        for pp in 1..p {
            for qq in 1..=q {
                if p * qq - pp * q == 1 {
                    out.push((pp, qq));
                }
            }
        }
        out
    }

    #[test]
    fn standard_pairs() {
        let l = normalize_lens(8, 5).unwrap();
        assert_eq!((l.p_std, l.q_std), (3, 2));
        let l = normalize_lens(2, 1).unwrap();
        assert_eq!((l.p_std, l.q_std), (1, 1));
        for p in 3..=20 {
            let l = normalize_lens(p, p - 1).unwrap();
            assert_eq!((l.p_std, l.q_std), (1, 1));
        }
        for p in 2..=80 {
            for q in 1..p {
                if gcd(p, q) == 1 {
                    let l = normalize_lens(p, q).unwrap();
                    assert_eq!(scan(p, q), vec![(l.p_std, l.q_std)], "L({p},{q})");
                    assert_eq!(l.gluing_matrix().det().unwrap(), -1);
                }
            }
        }
    }

    #[test]
    fn invalid_lenses() {
        for (p, q) in [(8, 4), (5, 5), (3, 7), (5, 0), (1, 0), (6, -1)] {
            assert!(matches!(normalize_lens(p, q), Err(Error::InvalidLens { .. })), "L({p},{q})");
        }
    }

    #[test]
    fn duals() {
        let (d, m) = dual_lens(&normalize_lens(8, 5).unwrap()).unwrap();
        assert_eq!((d.p, d.q), (8, 5));
        assert_eq!(m, Mat2::new(-5, -3, 8, 5));
        let (d, m) = dual_lens(&normalize_lens(3, 2).unwrap()).unwrap();
        assert_eq!((d.p, d.q), (3, 2));
        assert_eq!(m, Mat2::new(-2, -1, 3, 2));
        let (d, m) = dual_lens(&normalize_lens(5, 2).unwrap()).unwrap();
        assert_eq!((d.p, d.q), (5, 3));
        assert_eq!(m, Mat2::new(-3, -1, 5, 2));
    }

    #[test]
    fn dual_round_trip_exhaustive() {
        for p in 2..=200 {
            for q in 1..p {
                if gcd(p, q) != 1 {
                    continue;
                }
                let l = normalize_lens(p, q).unwrap();
                let (d, m) = dual_lens(&l).unwrap();
                let (dd, mm) = dual_lens(&d).unwrap();
                assert_eq!(dd, l);
                assert_eq!(m.det().unwrap(), -1);
                assert_eq!(mm.mul(&m).unwrap(), Mat2::IDENTITY, "L({p},{q})");
                assert_eq!(m.mul(&mm).unwrap(), Mat2::IDENTITY, "L({p},{q})");
            }
        }
    }

    #[test]
    fn knot_transform_examples() {
        let l85 = normalize_lens(8, 5).unwrap();
        let t = transform_knot(&l85, &KnotClass::new(-11, 17).unwrap()).unwrap();
        assert_eq!(t.raw, (4, -3));
        assert_eq!((t.knot.a, t.knot.b, t.knot.orientation_flipped), (-4, 3, true));
        assert!(!t.rational_unknot);

        let t = transform_knot(&l85, &KnotClass::new(-7, 11).unwrap()).unwrap();
        assert_eq!(t.raw, (2, -1));
        assert_eq!((t.knot.a, t.knot.b), (-2, 1));
        assert!(t.rational_unknot);

        let l52 = normalize_lens(5, 2).unwrap();
        let t = transform_knot(&l52, &KnotClass::new(-9, 19).unwrap()).unwrap();
        assert_eq!(t.raw, (8, -7));
        assert_eq!((t.knot.a, t.knot.b, t.knot.orientation_flipped), (-8, 7, true));
        assert_eq!((t.space.p, t.space.q), (5, 3));

        // −3/2 is the closed endpoint −p'/q', not in the open interval
        assert!(matches!(
            transform_knot(&l85, &KnotClass::new(-2, 3).unwrap()),
            Err(Error::WrongCase(_))
        ));
    }

    #[test]
    fn knot_normalization() {
        let k = KnotClass::new(3, -7).unwrap();
        assert_eq!((k.a, k.b, k.orientation_flipped), (-3, 7, true));
        assert_eq!(k.literal(), (3, -7));
        let k = KnotClass::new(2, 3).unwrap();
        assert!(k.is_positive());
        assert!(KnotClass::new(4, 6).is_err());
        assert!(KnotClass::new(0, 0).is_err());
        assert!(KnotClass::new(0, 2).is_err());
        assert_eq!(KnotClass::new(1, 0).unwrap().literal(), (1, 0));
    }
}
