//! Negative continued fractions, the involution Ã and shortest hop sequences
//! from −∞ to −p/q in the Farey tessellation.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{self, is_farey_neighbor, mediant_delta, Mat2, Rational, Slope};
use crate::lens::LensSpace;

/// `r₁ − 1/(r₂ − 1/(… − 1/r_m))` with every `rᵢ <= −2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NegCF {
    entries: Vec<i64>,
}

impl NegCF {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Degenerate("empty continued fraction".into()));
        }
        if let Some(r) = entries.iter().find(|&&r| r > -2) {
            return Err(Error::OutOfDomain(format!("continued fraction entry {r} is not <= -2")));
        }
        Ok(NegCF { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn value(&self) -> Result<Rational> {
        cf_eval(self)
    }

    /// The integral vector `(x, y)` of slope `y/x` obtained from
    /// `[[0,1],[−1,r₁]] ⋯ [[0,1],[−1,r_{m−1}]] · (1, r_m)ᵀ`.
    pub fn matrix_vector(&self) -> Result<(i64, i64)> {
        let (last, init) = self.entries.split_last().expect("nonempty");
        let mut v = (1, *last);
        for &r in init.iter().rev() {
            v = Mat2::new(0, 1, -1, r).apply(v.0, v.1)?;
        }
        Ok(v)
    }
}

impl fmt::Display for NegCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str("]")
    }
}

/// Expands `x < −1` into its negative continued fraction.
pub fn cf_expand(x: Rational) -> Result<NegCF> {
    if x >= Rational::from_int(-1) {
        return Err(Error::OutOfDomain(format!("{x} is not < -1")));
    }
    let mut entries = Vec::new();
    let mut x = x;
    loop {
        // x = r − 1/y with y < −1 forces r = ⌊x⌋ off the integers
        let r = x.floor();
        entries.push(r);
        if x.is_integer() {
            break;
        }
        let frac = x.try_sub(Rational::from_int(r))?;
        x = Rational::from_int(-1).try_div(frac)?;
    }
    NegCF::new(entries)
}

pub fn cf_eval(c: &NegCF) -> Result<Rational> {
    fold_value(&c.entries)
}

/// Right fold of `r₁ − 1/(r₂ − …)`; tolerates any entries whose partial
/// values never vanish.
fn fold_value(entries: &[i64]) -> Result<Rational> {
    let (last, init) = entries.split_last().ok_or_else(|| Error::Degenerate("empty".into()))?;
    let mut acc = Rational::from_int(*last);
    for &r in init.iter().rev() {
        acc = Rational::from_int(r).try_sub(Rational::ONE.try_div(acc)?)?;
    }
    Ok(acc)
}

/// The projective involution induced by `A = [[1,1],[0,−1]]`; it swaps −1 and
/// ∞ and sends `−p/q` to `−p/(p−q)`.
pub fn involution_a(x: Slope) -> Slope {
    try_involution_a(x).expect("involution of a representable slope")
}

pub fn try_involution_a(x: Slope) -> Result<Slope> {
    let d = x.direction();
    let (u, v) = Mat2::new(1, 1, 0, -1).apply(d.u, d.v)?;
    Ok(exact::Direction::new(u, v)?.slope())
}

/// The shortest hop sequence `−∞ = −p₀/q₀ < … < −pₙ/qₙ = −p/q` with its delta
/// slopes `−(pᵢ−pᵢ₋₁)/(qᵢ−qᵢ₋₁)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopSequence {
    pub slopes: Vec<Slope>,
    pub deltas: Vec<Slope>,
}

impl HopSequence {
    pub fn hops(&self) -> usize {
        self.deltas.len()
    }

    /// `(pᵢ, qᵢ)` with `(1, 0)` for the initial −∞.
    pub fn vertex(&self, i: usize) -> (i64, i64) {
        self.slopes[i].as_neg_frac()
    }

    /// `(sᵢ, tᵢ)` with `deltaᵢ = −sᵢ/tᵢ`, for `i` in `1..=n`.
    pub fn delta_pair(&self, i: usize) -> (i64, i64) {
        self.deltas[i - 1].as_neg_frac()
    }

    /// Checks the structural invariants: neighbors, delta formula, and deltas
    /// inside `[−p'/q', −1]`.
    pub fn validate(&self, l: &LensSpace) -> Result<()> {
        let fail = |what: String| Err(Error::InvariantViolation(format!("hop sequence of {l}: {what}")));
        if self.slopes.first() != Some(&Slope::INFINITY) {
            return fail("does not start at -inf".into());
        }
        if self.slopes.last() != Some(&Slope::neg_frac(l.p, l.q)?) {
            return fail("does not end at -p/q".into());
        }
        if self.deltas.len() + 1 != self.slopes.len() {
            return fail("delta count mismatch".into());
        }
        let lo = l.std_ratio().try_neg()?;
        let hi = Rational::from_int(-1);
        for (i, w) in self.slopes.windows(2).enumerate() {
            if w[0].chart_cmp(&w[1])? != std::cmp::Ordering::Less {
                return fail(format!("{} !< {}", w[0], w[1]));
            }
            if !is_farey_neighbor(w[0], w[1]) {
                return fail(format!("{} and {} are not neighbors", w[0], w[1]));
            }
            if mediant_delta(w[0], w[1])? != self.deltas[i] {
                return fail(format!("delta {} is wrong", self.deltas[i]));
            }
            match self.deltas[i].to_rational() {
                Some(d) if d >= lo && d <= hi => {}
                _ => return fail(format!("delta {} outside [{lo}, -1]", self.deltas[i])),
            }
        }
        Ok(())
    }
}

impl fmt::Display for HopSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let slopes: Vec<String> = self.slopes.iter().map(|s| s.chart().to_string()).collect();
        let deltas: Vec<String> = self.deltas.iter().map(|s| s.to_string()).collect();
        write!(f, "{} | deltas: {}", slopes.join(" "), deltas.join(" "))
    }
}

/// Values visited by the walk that raises the last entry by one, absorbing
/// trailing `−1` entries via `cf(…, r, −1) = cf(…, r + 1)`; from `cf(c)` up to
/// `−1`, strictly increasing.
pub fn cf_walk(c: &NegCF) -> Result<Vec<Rational>> {
    let mut entries = c.entries.clone();
    let mut values = vec![fold_value(&entries)?];
    while entries != [-1] {
        *entries.last_mut().expect("nonempty") += 1;
        while entries.len() > 1 && *entries.last().expect("nonempty") == -1 {
            entries.pop();
            *entries.last_mut().expect("nonempty") += 1;
        }
        values.push(fold_value(&entries)?);
    }
    Ok(values)
}

pub fn hop_sequence(l: &LensSpace) -> Result<HopSequence> {
    let start = Rational::new(-l.p, l.p - l.q)?;
    let walk = cf_walk(&cf_expand(start)?)?;
    let slopes: Vec<Slope> = walk
        .into_iter()
        .rev()
        .map(|v| try_involution_a(Slope::from(v)))
        .collect::<Result<_>>()?;
    let deltas = slopes
        .windows(2)
        .map(|w| mediant_delta(w[0], w[1]))
        .collect::<Result<_>>()?;
    Ok(HopSequence { slopes, deltas })
}
