//! Brute-force verifiers used as ground truth in tests and audit runs.
//!
//! Nothing here consults the case dispatch, hop sequences or closed forms;
//! only the exact arithmetic types are shared with the production path.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::exact::{self, gcd, Mat2, Slope};
use crate::lens::{KnotClass, LensSpace};

/// Candidate dividing slopes for [`brute_min_abs`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlopeSet {
    /// All reduced `−s/t ∈ (−p/q, 0)`: slopes of convex Heegaard tori.
    HeegaardRange,
    /// All slopes (∞ included) outside the closed interval `[lo, hi]`, where
    /// `lo < hi` are Farey neighbors on the negative chart.
    OutsideClosed { lo: Slope, hi: Slope },
}

/// Minimum of `|a·s + b·t|` over the reduced slopes `−s/t` of `region`, with
/// every minimizer (sorted on the chart).
pub fn brute_min_abs(l: &LensSpace, k: &KnotClass, region: SlopeSet) -> Result<(i64, Vec<Slope>)> {
    match region {
        SlopeSet::HeegaardRange => min_over_heegaard_range(l.p, l.q, k.a, k.b),
        SlopeSet::OutsideClosed { lo, hi } => min_outside_closed(lo, hi, k.a, k.b),
    }
}

fn min_over_heegaard_range(p: i64, q: i64, a: i64, b: i64) -> Result<(i64, Vec<Slope>)> {
    let unbounded = |why: &str| Err(Error::Degenerate(format!("|{a}s + {b}t| over (-{p}/{q}, 0): {why}")));
    // (s, t) with s, t >= 1 and s·q < t·p
    let admissible = |s: i64, t: i64| s >= 1 && t >= 1 && (s as i128) * (q as i128) < (t as i128) * (p as i128);
    let mut best: Option<(i64, Vec<(i64, i64)>)> = None;
    let mut offer = |v: i64, s: i64, t: i64| match &mut best {
        Some((bv, list)) if v == *bv => list.push((s, t)),
        Some((bv, _)) if v > *bv => {}
        _ => best = Some((v, vec![(s, t)])),
    };

    if b == 0 {
        // |a|·s is minimal at s = 1 for every t
        return unbounded("infinitely many minimizers");
    }
    if a == 0 {
        for s in 1..=(p - 1) / q {
            offer(b.abs(), s, 1);
        }
    } else if (a > 0) == (b > 0) {
        // |a|s + |b|t <= v0 bounds both coordinates
        let v0 = a.abs() + b.abs();
        for t in 1..=v0 / b.abs() {
            for s in 1..=v0 / a.abs() {
                if admissible(s, t) && gcd(s, t) == 1 {
                    offer(exact::add(exact::mul(a, s)?, exact::mul(b, t)?)?.abs(), s, t);
                }
            }
        }
    } else {
        // normalize to a < 0 < b: the value is |b·t − |a|·s|
        let (na, nb) = (a.abs(), b.abs());
        let gap = nb as i128 * q as i128 - na as i128 * p as i128;
        if gap < 0 {
            // b/a itself is admissible and 0 is a lower bound
            offer(0, nb, na);
        } else if gap == 0 {
            return unbounded("b/a = -p/q, infinitely many minimizers");
        } else {
            // On s·q < t·p the value exceeds t·gap/q, so once a value v is
            // known only t <= v·q/gap can do better. For fixed t the value
            // falls as s grows, so the largest coprime admissible s wins.
            let mut bound = nb - na; // value at s = t = 1
            let mut t = 1i64;
            while (t as i128) * gap <= bound as i128 * q as i128 {
                let mut s = ((t as i128 * p as i128 - 1) / q as i128) as i64;
                while s >= 1 && gcd(s, t) != 1 {
                    s -= 1;
                }
                if s >= 1 {
                    let v = exact::sub(exact::mul(nb, t)?, exact::mul(na, s)?)?;
                    offer(v, s, t);
                    bound = bound.min(v);
                }
                t += 1;
            }
        }
    }
    match best {
        None => Err(Error::Degenerate(format!("no admissible slope in (-{p}/{q}, 0)"))),
        Some((v, list)) => {
            let mut slopes = list.into_iter().map(|(s, t)| Slope::neg_frac(s, t)).collect::<Result<Vec<_>>>()?;
            sort_chart(&mut slopes);
            Ok((v, slopes))
        }
    }
}

fn min_outside_closed(lo: Slope, hi: Slope, a: i64, b: i64) -> Result<(i64, Vec<Slope>)> {
    let (u1, v1) = lo.as_neg_frac();
    let (u2, v2) = hi.as_neg_frac();
    if exact::cross(u1, u2, v1, v2)? != 1 || v1 < 0 || v2 < 0 || u1 < 0 || u2 < 0 {
        return Err(Error::Degenerate(format!("[{lo}, {hi}] is not a positively ordered Farey edge")));
    }
    // M sends (−v1, u1) to (1, 0) and (−v2, u2) to (0, 1)
    let m = Mat2::new(u2, v2, -u1, -v1);
    let back = Mat2::new(-v1, -v2, u1, u2);
    let (ka, kb) = m.apply(a, b)?;
    if ka == 0 || kb == 0 || (ka > 0) != (kb > 0) {
        return Err(Error::Degenerate(format!("slope {b}/{a} is not inside ({lo}, {hi})")));
    }
    // outside the closed interval means image directions (x, y) with x·y < 0,
    // where |det| = |x|·|kb| + |y|·|ka|
    let (na, nb) = (ka.abs(), kb.abs());
    let v0 = na + nb;
    let mut best = i64::MAX;
    let mut arg = vec![];
    for x in 1..=v0 / nb {
        for y in 1..=v0 / na {
            if gcd(x, y) != 1 {
                continue;
            }
            let v = exact::add(exact::mul(x, nb)?, exact::mul(y, na)?)?;
            if v < best {
                best = v;
                arg.clear();
            }
            if v == best {
                let (u, w) = back.apply(x, -y)?;
                arg.push(exact::Direction::new(u, w)?.slope());
            }
        }
    }
    sort_chart(&mut arg);
    Ok((best, arg))
}

fn sort_chart(v: &mut [Slope]) {
    v.sort_by(|x, y| {
        x.chart_cmp(y).unwrap_or_else(|_| x.denom().cmp(&y.denom()))
    });
}

/// Reduced `(x, y)` standing for the slope `−x/y`, `(1, 0)` being −∞.
fn arc_vertices(p: i64, q: i64, xmax: i64, ymax: i64, restrict: bool) -> Vec<(i64, i64)> {
    let mut out = vec![];
    for y in 0..=ymax {
        for x in 0..=xmax {
            if gcd(x, y) != 1 {
                continue;
            }
            // on the arc [−∞, −p/q] means x/y >= p/q
            if restrict && (x as i128) * (q as i128) < (p as i128) * (y as i128) {
                continue;
            }
            out.push((x, y));
        }
    }
    out
}

/// Breadth-first distance from −∞ to −p/q in the Farey graph on the slopes
/// `−x/y` with `0 <= x <= xmax`, `0 <= y <= ymax`, optionally restricted to
/// the arc `[−∞, −p/q]` swept by hop sequences.
pub fn bfs_distance(l: &LensSpace, xmax: i64, ymax: i64, restrict_to_arc: bool) -> Option<usize> {
    let verts = arc_vertices(l.p, l.q, xmax, ymax, restrict_to_arc);
    let start = verts.iter().position(|&v| v == (1, 0))?;
    let goal = verts.iter().position(|&v| v == (l.p, l.q))?;
    let mut dist = vec![usize::MAX; verts.len()];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        if i == goal {
            return Some(dist[i]);
        }
        let (x1, y1) = verts[i];
        for (j, &(x2, y2)) in verts.iter().enumerate() {
            if dist[j] == usize::MAX && (x1 * y2 - x2 * y1).abs() == 1 {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    None
}

/// Length of the shortest hop sequence from −∞ to −p/q found by
/// breadth-first search over slopes `−x/y` on the arc `[−∞, −p/q]` with
/// `x <= p`, `y <= q`.
pub fn bfs_shortest_hop(l: &LensSpace) -> Result<usize> {
    bfs_distance(l, l.p, l.q, true)
        .ok_or_else(|| Error::InvariantViolation(format!("-{}/{} unreachable from -inf", l.p, l.q)))
}

/// Exhaustive scan for `(p', q')` with `0 < p' < p`, `0 < q' <= q`,
/// `p·q' − p'·q = 1`; exactly one solution is expected.
pub fn brute_std_pair(p: i64, q: i64) -> Result<(i64, i64)> {
    if !(q >= 1 && p > q && gcd(p, q) == 1) {
        return Err(Error::InvalidLens { p, q, reason: "need p > q >= 1 coprime" });
    }
    let mut found = vec![];
    for pp in 1..p {
        for qq in 1..=q {
            if p as i128 * qq as i128 - pp as i128 * q as i128 == 1 {
                found.push((pp, qq));
            }
        }
    }
    match found.as_slice() {
        [one] => Ok(*one),
        _ => Err(Error::InvariantViolation(format!(
            "L({p},{q}) has {} standard pairs",
            found.len()
        ))),
    }
}
