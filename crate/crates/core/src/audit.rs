//! Differential checks of the closed forms against the brute-force oracles.

use std::fmt;

use crate::error::{Error, Result};
use crate::farey::hop_sequence;
use crate::invariants::max_twisting;
use crate::lens::{KnotClass, LensSpace};
use crate::oracle::{bfs_shortest_hop, brute_min_abs, brute_std_pair, SlopeSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Agree,
    /// Neither side defines a value (unbounded argmin, out-of-scope class).
    Skipped(String),
    Mismatch(String),
}

impl Outcome {
    pub fn is_mismatch(&self) -> bool {
        matches!(self, Outcome::Mismatch(_))
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Agree => f.write_str("ok"),
            Outcome::Skipped(why) => write!(f, "skipped ({why})"),
            Outcome::Mismatch(why) => write!(f, "MISMATCH: {why}"),
        }
    }
}

/// `(p', q')` from the closed form against the exhaustive scan.
pub fn std_pair(l: &LensSpace) -> Result<Outcome> {
    let brute = brute_std_pair(l.p, l.q)?;
    Ok(if brute == (l.p_std, l.q_std) {
        Outcome::Agree
    } else {
        Outcome::Mismatch(format!("{l}: standard pair {:?} vs scan {brute:?}", (l.p_std, l.q_std)))
    })
}

/// Hop count against the breadth-first distance from −∞ to −p/q.
pub fn hops(l: &LensSpace) -> Result<Outcome> {
    let h = hop_sequence(l)?;
    h.validate(l)?;
    let bfs = bfs_shortest_hop(l)?;
    Ok(if bfs == h.hops() {
        Outcome::Agree
    } else {
        Outcome::Mismatch(format!("{l}: {} hops vs breadth-first distance {bfs}", h.hops()))
    })
}

/// `−tw̄` against the exhaustive minimum of `|a·s + b·t|` over `(−p/q, 0)`;
/// the reported witnesses must be among the minimizers.
pub fn twisting(l: &LensSpace, k: &KnotClass) -> Result<Outcome> {
    let closed = match max_twisting(l, k) {
        Ok(x) => Some(x),
        Err(Error::OutOfScope(_)) => None,
        Err(e) => return Err(e),
    };
    let brute = match brute_min_abs(l, k, SlopeSet::HeegaardRange) {
        Ok(x) => Some(x),
        Err(Error::Degenerate(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(match (closed, brute) {
        (Some((tw, witnesses)), Some((v, argmin))) => {
            if -tw != v {
                Outcome::Mismatch(format!("{k} in {l}: tw {tw} vs brute minimum {v}"))
            } else if let Some(w) = witnesses.iter().find(|w| !argmin.contains(w)) {
                Outcome::Mismatch(format!("{k} in {l}: witness {w} is not a minimizer"))
            } else {
                Outcome::Agree
            }
        }
        (None, None) => Outcome::Skipped(format!("{k} in {l}: no finite maximal twisting")),
        (None, Some((v, _))) => Outcome::Skipped(format!("{k} in {l}: out of scope, brute minimum {v}")),
        (Some((tw, _)), None) => {
            Outcome::Mismatch(format!("{k} in {l}: tw {tw} but the brute minimum is undefined"))
        }
    })
}

/// Tallies of a sweep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub agree: usize,
    pub skipped: usize,
    pub mismatches: Vec<String>,
}

impl Tally {
    pub fn add(&mut self, o: Outcome) {
        match o {
            Outcome::Agree => self.agree += 1,
            Outcome::Skipped(_) => self.skipped += 1,
            Outcome::Mismatch(m) => self.mismatches.push(m),
        }
    }

    pub fn merge(mut self, other: Tally) -> Tally {
        self.agree += other.agree;
        self.skipped += other.skipped;
        self.mismatches.extend(other.mismatches);
        self
    }
}
