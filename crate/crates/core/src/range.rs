//! Mountain ranges, realizability under stabilization, the coarse equivalence
//! decision and transverse self-linking values.
//!
//! A stabilization lowers `tb` by one and moves `rot` by ±1, so the realized
//! pairs are the union of the downward cones below the peaks.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::invariants::ClassificationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MountainRange {
    pub tb_max: Rational,
    /// Sorted ascending, nonempty.
    pub rot_peaks: Vec<Rational>,
}

impl MountainRange {
    pub fn new(tb_max: Rational, mut rot_peaks: Vec<Rational>) -> Result<Self> {
        rot_peaks.sort();
        rot_peaks.dedup();
        if rot_peaks.is_empty() {
            return Err(Error::Degenerate("mountain range without peaks".into()));
        }
        for w in rot_peaks.windows(2) {
            if !w[1].try_sub(w[0])?.to_integer().is_some_and(|d| d % 2 == 0) {
                return Err(Error::InvariantViolation(format!(
                    "peaks {} and {} differ by a non-even amount",
                    w[0], w[1]
                )));
            }
        }
        Ok(MountainRange { tb_max, rot_peaks })
    }

    pub fn from_report(r: &ClassificationReport) -> Result<Self> {
        match r.tb_max {
            Some(tb) if r.in_scope => MountainRange::new(tb, r.rot_peaks.clone()),
            _ => Err(Error::OutOfScope(format!("{} in {} has no mountain range", r.knot, r.space))),
        }
    }

    pub fn contains(&self, tb: Rational, rot: Rational) -> bool {
        is_realized(self, tb, rot)
    }

    /// Realized rotation numbers `depth` stabilizations below the top.
    pub fn row(&self, depth: i64) -> Vec<Rational> {
        let mut out = Vec::new();
        for &peak in &self.rot_peaks {
            for j in 0..=depth {
                if let Ok(x) = peak.try_add(Rational::from_int(2 * j - depth)) {
                    out.push(x);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// True iff `(tb, rot)` is reached from some peak by `tb_max − tb`
/// stabilizations.
pub fn is_realized(mr: &MountainRange, tb: Rational, rot: Rational) -> bool {
    let d = match mr.tb_max.try_sub(tb).ok().and_then(|d| d.to_integer()) {
        Some(d) if d >= 0 => d,
        _ => return false,
    };
    mr.rot_peaks.iter().any(|&peak| {
        match rot.try_sub(peak).ok().and_then(|x| x.to_integer()) {
            Some(shift) => shift.unsigned_abs() <= d as u64 && (shift - d) % 2 == 0,
            None => false,
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Which {
    First,
    Second,
    Both,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EquivVerdict {
    Equivalent,
    Inequivalent,
    NotRealized(Which),
    OutOfScope(String),
}

impl fmt::Display for EquivVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivVerdict::Equivalent => f.write_str("EQUIVALENT"),
            EquivVerdict::Inequivalent => f.write_str("INEQUIVALENT"),
            EquivVerdict::NotRealized(Which::First) => f.write_str("NOT_REALIZED(first)"),
            EquivVerdict::NotRealized(Which::Second) => f.write_str("NOT_REALIZED(second)"),
            EquivVerdict::NotRealized(Which::Both) => f.write_str("NOT_REALIZED(both)"),
            EquivVerdict::OutOfScope(reason) => write!(f, "OUT_OF_SCOPE({reason})"),
        }
    }
}

/// Coarse equivalence of two Legendrian knots given by their classification
/// reports and `(tb, rot)` pairs. Knot types are compared literally.
pub fn decide_equiv(
    r1: &ClassificationReport,
    (tb1, rot1): (Rational, Rational),
    r2: &ClassificationReport,
    (tb2, rot2): (Rational, Rational),
) -> Result<EquivVerdict> {
    if r1.space != r2.space {
        return Err(Error::InvalidComparison(format!(
            "knots live in different lens spaces {} and {}",
            r1.space, r2.space
        )));
    }
    for r in [r1, r2] {
        if !r.in_scope {
            return Ok(EquivVerdict::OutOfScope(format!("{} is {}", r.knot, r.case)));
        }
    }
    let ok1 = MountainRange::from_report(r1)?.contains(tb1, rot1);
    let ok2 = MountainRange::from_report(r2)?.contains(tb2, rot2);
    Ok(match (ok1, ok2) {
        (false, false) => EquivVerdict::NotRealized(Which::Both),
        (false, true) => EquivVerdict::NotRealized(Which::First),
        (true, false) => EquivVerdict::NotRealized(Which::Second),
        (true, true) if r1.knot == r2.knot && tb1 == tb2 && rot1 == rot2 => EquivVerdict::Equivalent,
        (true, true) => EquivVerdict::Inequivalent,
    })
}

/// A remark for pairs whose knot types differ only by orientation; such
/// coincidences are not decided here.
pub fn coincidence_note(r1: &ClassificationReport, r2: &ClassificationReport) -> Option<String> {
    let (k1, k2) = (r1.knot, r2.knot);
    (k1.a == k2.a && k1.b == k2.b && k1.orientation_flipped != k2.orientation_flipped).then(|| {
        format!("{k1} and {k2} are orientation reverses; possible knot-type coincidences are not modeled")
    })
}

/// Maximal self-linking number of the transverse push-offs, `tb̄ − min rot`,
/// and the values `sl_max − 2k` for `k = 0..=depth`.
pub fn sl_values(r: &ClassificationReport, depth: i64) -> Result<(Rational, Vec<Rational>)> {
    let mr = MountainRange::from_report(r)?;
    if depth < 0 {
        return Err(Error::OutOfDomain(format!("depth {depth} is negative")));
    }
    let sl_max = mr.tb_max.try_sub(mr.rot_peaks[0])?;
    let values = (0..=depth)
        .map(|k| sl_max.try_sub(Rational::from_int(2 * k)))
        .collect::<Result<_>>()?;
    Ok((sl_max, values))
}

/// A rendered mountain range: one row per `tb` level, one column per unit
/// of `rot`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub tb_max: Rational,
    /// Rotation number of column 0.
    pub rot_min: Rational,
    /// `cells[row][col]`; row 0 is the top.
    pub cells: Vec<Vec<Cell>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    Empty,
    Peak,
    Stabilized,
}

impl Diagram {
    pub fn rot_at(&self, col: usize) -> Rational {
        self.rot_min.try_add(Rational::from_int(col as i64)).expect("rendered range")
    }

    pub fn tb_at(&self, row: usize) -> Rational {
        self.tb_max.try_sub(Rational::from_int(row as i64)).expect("rendered range")
    }

    /// `(tb, rot)` of every realized cell, row by row.
    pub fn points(&self) -> Vec<(Rational, Rational)> {
        let mut out = vec![];
        for (i, row) in self.cells.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if *c != Cell::Empty {
                    out.push((self.tb_at(i), self.rot_at(j)));
                }
            }
        }
        out
    }

    pub fn text(&self) -> String {
        self.text_styled(false)
    }

    /// Plain-text grid; `color` wraps peaks in ANSI bold red.
    pub fn text_styled(&self, color: bool) -> String {
        let labels: Vec<String> = (0..self.cells.len()).map(|i| self.tb_at(i).to_string()).collect();
        let w = labels.iter().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for (label, row) in labels.iter().zip(&self.cells) {
            let _ = write!(out, "{label:>w$} |");
            for c in row {
                let mark = match c {
                    Cell::Empty => " .",
                    Cell::Peak if color => " \x1b[1;31m^\x1b[0m",
                    Cell::Peak => " ^",
                    Cell::Stabilized => " o",
                };
                out.push_str(mark);
            }
            out.push('\n');
        }
        let last = self.cells.first().map_or(0, Vec::len).saturating_sub(1);
        let _ = writeln!(out, "rot: {} .. {} (step 1); ^ peak, o stabilization", self.rot_min, self.rot_at(last));
        out
    }

    /// A standalone SVG drawing of the same grid.
    pub fn svg(&self) -> String {
        const STEP: usize = 24;
        const MARGIN: usize = 48;
        let cols = self.cells.first().map_or(0, Vec::len);
        let rows = self.cells.len();
        let width = 2 * MARGIN + cols.saturating_sub(1) * STEP;
        let height = 2 * MARGIN + rows.saturating_sub(1) * STEP;
        let at = |i: usize, j: usize| (MARGIN + j * STEP, MARGIN + i * STEP);
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        let _ = writeln!(out, r##"<rect width="{width}" height="{height}" fill="#ffffff"/>"##);
        for i in 0..rows.saturating_sub(1) {
            for j in 0..cols {
                if self.cells[i][j] == Cell::Empty {
                    continue;
                }
                for nj in [j.wrapping_sub(1), j + 1] {
                    if nj < cols && self.cells[i + 1][nj] != Cell::Empty {
                        let ((x1, y1), (x2, y2)) = (at(i, j), at(i + 1, nj));
                        let _ = writeln!(
                            out,
                            r##"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#888888" stroke-width="1"/>"##
                        );
                    }
                }
            }
        }
        for (i, row) in self.cells.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                let (x, y) = at(i, j);
                let fill = match c {
                    Cell::Empty => continue,
                    Cell::Peak => "#cc2222",
                    Cell::Stabilized => "#333333",
                };
                let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="4" fill="{fill}"/>"#);
            }
        }
        let _ = writeln!(
            out,
            r#"<text x="4" y="{}" font-size="10">tb {}</text>"#,
            MARGIN + 3,
            self.tb_max
        );
        let _ = writeln!(
            out,
            r#"<text x="{MARGIN}" y="{}" font-size="10">rot {} .. {}</text>"#,
            height - 12,
            self.rot_min,
            self.rot_at(cols.saturating_sub(1))
        );
        out.push_str("</svg>\n");
        out
    }
}

/// Lays out the cone of `mr` down to `depth` stabilizations.
pub fn render_range(mr: &MountainRange, depth: i64) -> Result<Diagram> {
    if depth < 0 {
        return Err(Error::OutOfDomain(format!("depth {depth} is negative")));
    }
    let lo = mr.rot_peaks[0].try_sub(Rational::from_int(depth))?;
    let hi = mr.rot_peaks[mr.rot_peaks.len() - 1].try_add(Rational::from_int(depth))?;
    let cols = hi.try_sub(lo)?.to_integer().expect("peaks differ by integers") as usize + 1;
    let mut cells = vec![vec![Cell::Empty; cols]; depth as usize + 1];
    for (i, row) in cells.iter_mut().enumerate() {
        for x in mr.row(i as i64) {
            let col = x.try_sub(lo)?.to_integer().expect("integral offset") as usize;
            row[col] = if i == 0 { Cell::Peak } else { Cell::Stabilized };
        }
    }
    Ok(Diagram { tb_max: mr.tb_max, rot_min: lo, cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::classify;
    use crate::lens::{normalize_lens, KnotClass};
    use std::collections::BTreeSet;

    fn r(x: &str) -> Rational {
        x.parse().unwrap()
    }

    fn report(p: i64, q: i64, a: i64, b: i64) -> ClassificationReport {
        classify(&normalize_lens(p, q).unwrap(), &KnotClass::new(a, b).unwrap()).unwrap()
    }

    fn single() -> MountainRange {
        MountainRange::new(r("45/8"), vec![r("-7/4")]).unwrap()
    }

    /// Breadth-first generation of all pairs reachable in exactly `d` steps.
    fn cone(mr: &MountainRange, d: i64) -> BTreeSet<(Rational, Rational)> {
        let mut frontier: BTreeSet<_> = mr.rot_peaks.iter().map(|&x| (mr.tb_max, x)).collect();
        for _ in 0..d {
            frontier = frontier
                .into_iter()
                .flat_map(|(tb, rot)| {
                    let tb = tb.try_sub(Rational::ONE).unwrap();
                    [(tb, rot.try_sub(Rational::ONE).unwrap()), (tb, rot.try_add(Rational::ONE).unwrap())]
                })
                .collect();
        }
        frontier
    }

    #[test]
    fn realizability_examples() {
        let mr = single();
        assert!(is_realized(&mr, r("45/8"), r("-7/4")));
        assert!(is_realized(&mr, r("37/8"), r("-3/4")));
        assert!(!is_realized(&mr, r("37/8"), r("-7/4")));
        assert!(!is_realized(&mr, r("53/8"), r("-7/4")));
        assert!(!is_realized(&mr, r("45/8"), r("-3/4")));
        assert!(!is_realized(&mr, r("41/8"), r("-7/4")));
    }

    #[test]
    fn realizability_matches_cone_generation() {
        let ranges = [
            single(),
            MountainRange::from_report(&report(8, 5, -5, 2)).unwrap(),
            MountainRange::from_report(&report(8, 5, -11, 17)).unwrap(),
            MountainRange::from_report(&report(13, 5, -17, 3)).unwrap(),
        ];
        for mr in &ranges {
            for d in 0..=6 {
                let reach = cone(mr, d);
                let tb = mr.tb_max.try_sub(Rational::from_int(d)).unwrap();
                let lo = mr.rot_peaks[0].try_sub(Rational::from_int(d + 3)).unwrap();
                for j in 0..(2 * d + 20) {
                    // integral shifts plus a few off-lattice quarter shifts
                    for frac in ["0", "1/4", "1/2"] {
                        let rot = lo.try_add(Rational::from_int(j)).unwrap().try_add(r(frac)).unwrap();
                        assert_eq!(is_realized(mr, tb, rot), reach.contains(&(tb, rot)), "{mr:?} d={d} rot={rot}");
                    }
                }
                let rendered: BTreeSet<_> = render_range(mr, d)
                    .unwrap()
                    .points()
                    .into_iter()
                    .filter(|(t, _)| *t == tb)
                    .collect();
                assert_eq!(rendered, reach);
            }
        }
    }

    #[test]
    fn cones_of_peaks_merge() {
        let mr = MountainRange::from_report(&report(8, 5, -5, 2)).unwrap();
        for (i, &x) in mr.rot_peaks.iter().enumerate() {
            for &y in &mr.rot_peaks[i + 1..] {
                let e = y.try_sub(x).unwrap().to_integer().unwrap() / 2;
                let solo = |p| MountainRange::new(mr.tb_max, vec![p]).unwrap();
                let shared: BTreeSet<_> = cone(&solo(x), e).intersection(&cone(&solo(y), e)).cloned().collect();
                assert!(!shared.is_empty());
            }
        }
    }

    #[test]
    fn equivalence_examples() {
        let rep = report(8, 5, -5, 2);
        let v = decide_equiv(&rep, (r("-17/2"), r("-5/2")), &rep, (r("-17/2"), r("-5/2"))).unwrap();
        assert_eq!(v, EquivVerdict::Equivalent);
        let v = decide_equiv(&rep, (r("-15/2"), r("-7/2")), &rep, (r("-15/2"), r("-3/2"))).unwrap();
        assert_eq!(v, EquivVerdict::Inequivalent);
        let v = decide_equiv(&rep, (r("-15/2"), r("0")), &rep, (r("-15/2"), r("-3/2"))).unwrap();
        assert_eq!(v, EquivVerdict::NotRealized(Which::First));
        let v = decide_equiv(&rep, (r("-15/2"), r("0")), &rep, (r("-15/2"), r("0"))).unwrap();
        assert_eq!(v, EquivVerdict::NotRealized(Which::Both));

        let fiber = report(8, 5, 0, 1);
        let v = decide_equiv(&rep, (r("-15/2"), r("-3/2")), &fiber, (r("0"), r("0"))).unwrap();
        assert!(matches!(v, EquivVerdict::OutOfScope(_)));

        let other = report(7, 2, -5, 2);
        assert!(matches!(
            decide_equiv(&rep, (r("-15/2"), r("-3/2")), &other, (r("0"), r("0"))),
            Err(Error::InvalidComparison(_))
        ));

        // orientation reverses are different oriented knot types
        let rev = report(8, 5, 5, -2);
        let v = decide_equiv(&rep, (r("-15/2"), r("-3/2")), &rev, (r("-15/2"), r("3/2"))).unwrap();
        assert_eq!(v, EquivVerdict::Inequivalent);
        let v = decide_equiv(&rep, (r("-15/2"), r("-3/2")), &rev, (r("-15/2"), r("-3/2"))).unwrap();
        assert_eq!(v, EquivVerdict::NotRealized(Which::Second));
        assert!(coincidence_note(&rep, &rev).is_some());
        assert!(coincidence_note(&rep, &rep).is_none());
    }

    #[test]
    fn self_linking() {
        let (max, vals) = sl_values(&report(8, 5, -3, 7), 2).unwrap();
        assert_eq!(max, r("59/8"));
        assert_eq!(vals, vec![r("59/8"), r("43/8"), r("27/8")]);
        let (max, vals) = sl_values(&report(8, 5, -5, 2), 0).unwrap();
        assert_eq!(max, r("-4"));
        assert_eq!(vals, vec![r("-4")]);
        assert!(matches!(sl_values(&report(8, 5, 0, 1), 0), Err(Error::OutOfScope(_))));
    }

    #[test]
    fn render_shapes() {
        let d = render_range(&single(), 1).unwrap();
        assert_eq!(d.cells.len(), 2);
        assert_eq!(d.cells[0], vec![Cell::Empty, Cell::Peak, Cell::Empty]);
        assert_eq!(d.cells[1], vec![Cell::Stabilized, Cell::Empty, Cell::Stabilized]);
        assert_eq!(
            d.text(),
            "45/8 | . ^ .\n37/8 | o . o\nrot: -11/4 .. -3/4 (step 1); ^ peak, o stabilization\n"
        );

        let mr = MountainRange::from_report(&report(8, 5, -5, 2)).unwrap();
        let d = render_range(&mr, 2).unwrap();
        let peaks: Vec<_> = d.points().into_iter().filter(|(t, _)| *t == mr.tb_max).map(|(_, x)| x).collect();
        assert_eq!(peaks, mr.rot_peaks);
        // neighboring apexes two apart merge one level down
        assert_eq!(mr.row(1), vec![r("-9/2"), r("-5/2"), r("-1/2"), r("3/2"), r("7/2")]);

        let d = render_range(&mr, 0).unwrap();
        assert_eq!(d.cells.len(), 1);
        assert_eq!(d.cells[0].iter().filter(|c| **c == Cell::Peak).count(), 4);

        let svg = render_range(&single(), 2).unwrap().svg();
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<circle").count(), 1 + 2 + 3);
        assert!(!svg.contains("href"));
    }

    #[test]
    fn invalid_ranges() {
        assert!(MountainRange::new(r("0"), vec![]).is_err());
        assert!(MountainRange::new(r("0"), vec![r("0"), r("1")]).is_err());
        assert!(render_range(&single(), -1).is_err());
    }
}
