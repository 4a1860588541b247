//! Case dispatch on the slope `b/a` and the classical invariants at maximal
//! Thurston–Bennequin number: order, maximal twisting, `tb̄`, and the rotation
//! numbers of the peaks.
//!
//! All formulas are evaluated exactly. For a knot on a convex Heegaard torus
//! of dividing slope `−s/t`:
//!
//! * `tw = −|a·s + b·t|`, `tb = tw + a·b + b²·q/p`;
//! * `r·rot = (r·a + r·b·q/p)·f(μ₁) + (r·b/p)·f(μ₂)` with `f(μ₁) = 1 − s` and
//!   `f(μ₂) = 1 − (p·t − q·s)` whenever `−s/t ∈ [−p'/q', −1]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{self, Rational, Slope};
use crate::farey::{hop_sequence, HopSequence};
use crate::lens::{transform_knot, KnotClass, LensSpace};

/// Where `b/a` sits relative to the hop sequence when `b/a < −p/q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LowerPosition {
    /// `b/a ∈ (−pᵢ₋₁/qᵢ₋₁, −pᵢ/qᵢ)`.
    InInterval(usize),
    /// `b/a = −pᵢ/qᵢ` for `0 < i < n`.
    OnVertex(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Region {
    /// `b = 0`: the unknot `±μ₁`.
    Mu1Unknot,
    /// `b/a ∈ (−1, 0)`.
    UpperInterval,
    /// `b/a ∈ [−p'/q', −1]`.
    MiddleClosed,
    /// `b/a ∈ (−p/q, −p'/q')`.
    DualInterval,
    /// `b/a = −p/q`: the unknot `±μ₂`.
    Mu2Unknot,
    /// `b/a ∈ (−∞, −p/q)`.
    LowerOpen(LowerPosition),
    /// `a = 0`.
    Fiber,
    /// `a·b > 0`; not a negative torus knot.
    PositiveKnot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CaseTag {
    pub region: Region,
    /// `b = 1`, or `|b̃| = 1` after the dual transform.
    pub rational_unknot: bool,
}

impl CaseTag {
    pub fn in_scope(&self) -> bool {
        !self.rational_unknot
            && !matches!(
                self.region,
                Region::Mu1Unknot | Region::Mu2Unknot | Region::Fiber | Region::PositiveKnot
            )
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Mu1Unknot => f.write_str("MU1_UNKNOT"),
            Region::UpperInterval => f.write_str("UPPER_INTERVAL"),
            Region::MiddleClosed => f.write_str("MIDDLE_CLOSED"),
            Region::DualInterval => f.write_str("DUAL_INTERVAL"),
            Region::Mu2Unknot => f.write_str("MU2_UNKNOT"),
            Region::LowerOpen(LowerPosition::InInterval(i)) => write!(f, "LOWER_OPEN/IN_INTERVAL({i})"),
            Region::LowerOpen(LowerPosition::OnVertex(i)) => write!(f, "LOWER_OPEN/ON_VERTEX({i})"),
            Region::Fiber => f.write_str("FIBER"),
            Region::PositiveKnot => f.write_str("POSITIVE"),
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rational_unknot {
            write!(f, "RATIONAL_UNKNOT({})", self.region)
        } else {
            fmt::Display::fmt(&self.region, f)
        }
    }
}

pub fn case_of(l: &LensSpace, k: &KnotClass) -> Result<CaseTag> {
    let hops = hop_sequence(l)?;
    case_with_hops(l, k, &hops)
}

/// [`case_of`] with a precomputed hop sequence for `l`.
pub fn case_with_hops(l: &LensSpace, k: &KnotClass, hops: &HopSequence) -> Result<CaseTag> {
    let KnotClass { a, b, .. } = *k;
    if (a, b) == (0, 0) || exact::gcd(a, b) != 1 {
        return Err(Error::InvalidKnot { a, b, reason: "not a primitive class" });
    }
    let tag = |region| CaseTag { region, rational_unknot: false };
    if k.is_positive() {
        return Ok(tag(Region::PositiveKnot));
    }
    if b == 0 {
        return Ok(tag(Region::Mu1Unknot));
    }
    if a == 0 {
        return Ok(tag(Region::Fiber));
    }
    // a < 0 < b from here on; compare x = −b/a = b/|a| > 0 against 1, p'/q', p/q
    let x = Rational::new(b, -a)?;
    let one = Rational::ONE;
    let region = if x < one {
        Region::UpperInterval
    } else if x <= l.std_ratio() {
        Region::MiddleClosed
    } else if x < l.ratio() {
        Region::DualInterval
    } else if x == l.ratio() {
        Region::Mu2Unknot
    } else {
        Region::LowerOpen(lower_position(x, hops)?)
    };
    let rational_unknot = match region {
        Region::DualInterval => b == 1 || transform_knot(l, k)?.rational_unknot,
        _ => b == 1,
    };
    Ok(CaseTag { region, rational_unknot })
}

/// Locates `−x` (with `x > p/q`) among the hop vertices `−pᵢ/qᵢ`.
fn lower_position(x: Rational, hops: &HopSequence) -> Result<LowerPosition> {
    for i in 1..hops.slopes.len() {
        let (pi, qi) = hops.vertex(i);
        let vi = Rational::new(pi, qi)?;
        if x > vi {
            return Ok(LowerPosition::InInterval(i));
        }
        if x == vi {
            return Ok(LowerPosition::OnVertex(i));
        }
    }
    Err(Error::InvariantViolation(format!("slope -{x} not located in the hop sequence")))
}

/// Order of the class in `H₁(L(p,q)) = ℤ/p`.
pub fn order_of(l: &LensSpace, k: &KnotClass) -> i64 {
    l.p / exact::gcd(l.p, k.b)
}

/// Maximal twisting `tw̄(K, Fr T)` and the dividing slopes realizing it.
pub fn max_twisting(l: &LensSpace, k: &KnotClass) -> Result<(i64, Vec<Slope>)> {
    let hops = hop_sequence(l)?;
    let case = case_with_hops(l, k, &hops)?;
    max_twisting_in(l, k, case, &hops)
}

fn max_twisting_in(l: &LensSpace, k: &KnotClass, case: CaseTag, hops: &HopSequence) -> Result<(i64, Vec<Slope>)> {
    match case.region {
        Region::UpperInterval | Region::MiddleClosed | Region::DualInterval => {
            Ok((0, vec![Slope::from(k.slope().expect("a != 0"))]))
        }
        Region::LowerOpen(LowerPosition::InInterval(i)) => {
            let (s, t) = hops.delta_pair(i);
            let v = exact::add(exact::mul(k.a, s)?, exact::mul(k.b, t)?)?;
            Ok((exact::neg(exact::abs(v)?)?, vec![hops.deltas[i - 1]]))
        }
        Region::LowerOpen(LowerPosition::OnVertex(i)) => Ok((-1, vec![hops.deltas[i - 1], hops.deltas[i]])),
        _ => Err(Error::OutOfScope(format!("{} has no maximal twisting in {l} ({case})", k))),
    }
}

pub fn f_mu1(s: i64) -> i64 {
    1 - s
}

pub fn f_mu2(l: &LensSpace, s: i64, t: i64) -> Result<i64> {
    check_middle_slope(l, s, t)?;
    let pt_qs = exact::cross(l.p, l.q, s, t)?;
    exact::sub(1, pt_qs)
}

/// `−s/t ∈ [−p'/q', −1]` with `s, t > 0` coprime.
fn check_middle_slope(l: &LensSpace, s: i64, t: i64) -> Result<()> {
    let ok = s > 0 && t > 0 && exact::gcd(s, t) == 1 && {
        let x = Rational::new(s, t)?;
        x >= Rational::ONE && x <= l.std_ratio()
    };
    if ok {
        Ok(())
    } else {
        Err(Error::WrongCase(format!(
            "dividing slope -{s}/{t} is not in [-{}/{}, -1]",
            l.p_std, l.q_std
        )))
    }
}

/// Rotation number of a Legendrian `(a,b)` knot on a convex torus of dividing
/// slope `−s/t ∈ [−p'/q', −1]`, evaluated from `r·rot = f_T(r[K])`.
///
/// The knot's literal orientation is used, so a reversed class yields the
/// negated value.
pub fn rot_from_slope(l: &LensSpace, k: &KnotClass, s: i64, t: i64) -> Result<Rational> {
    let f2 = f_mu2(l, s, t)?;
    let f1 = f_mu1(s);
    let (a, b) = k.literal();
    let r = order_of(l, k);
    // r·a + r·b·q/p and r·b/p are integers by the choice of r
    let c1 = Rational::new(b, l.p)?.try_mul_int(l.q)?.try_add(Rational::from_int(a))?.try_mul_int(r)?;
    let c2 = Rational::new(b, l.p)?.try_mul_int(r)?;
    let (c1, c2) = match (c1.to_integer(), c2.to_integer()) {
        (Some(x), Some(y)) => (x, y),
        _ => {
            return Err(Error::InvariantViolation(format!(
                "r[K] has non-integral coordinates for {k} in {l}"
            )))
        }
    };
    let r_rot = exact::add(exact::mul(c1, f1)?, exact::mul(c2, f2)?)?;
    Rational::new(r_rot, r)
}

/// `b(1+q)/p`, the common offset of every closed-form rotation number.
fn offset(l: &LensSpace, b: i64) -> Result<Rational> {
    Rational::new(b, l.p)?.try_mul_int(exact::add(l.q, 1)?)
}

/// Rotation numbers of the peaks of the mountain range, sorted ascending.
pub fn rot_peaks(l: &LensSpace, k: &KnotClass) -> Result<Vec<Rational>> {
    let hops = hop_sequence(l)?;
    let case = case_with_hops(l, k, &hops)?;
    rot_peaks_in(l, k, case, &hops)
}

fn rot_peaks_in(l: &LensSpace, k: &KnotClass, case: CaseTag, hops: &HopSequence) -> Result<Vec<Rational>> {
    if !case.in_scope() {
        return Err(Error::OutOfScope(format!("{k} in {l} is {case}")));
    }
    let oriented = |mut v: Vec<Rational>| -> Result<Vec<Rational>> {
        if k.orientation_flipped {
            v = v.into_iter().map(Rational::try_neg).collect::<Result<_>>()?;
        }
        v.sort();
        v.dedup();
        Ok(v)
    };
    let KnotClass { a, b, .. } = *k;
    match case.region {
        Region::MiddleClosed => {
            let rot = Rational::from_int(a).try_add(offset(l, b)?)?;
            // the closed form must agree with the torus-level evaluation at s = b, t = −a
            let check = rot_from_slope(l, &KnotClass { orientation_flipped: false, ..*k }, b, -a)?;
            if check != rot {
                return Err(Error::InvariantViolation(format!("rot {rot} != {check} for {k} in {l}")));
            }
            oriented(vec![rot])
        }
        Region::UpperInterval => oriented(upper_peaks(l, a, b)?),
        Region::DualInterval => {
            let t = transform_knot(l, k)?;
            let dual_hops = hop_sequence(&t.space)?;
            let dual_case = case_with_hops(&t.space, &t.knot, &dual_hops)?;
            if dual_case.region != Region::UpperInterval {
                return Err(Error::InvariantViolation(format!(
                    "dual of {k} in {l} lands in {dual_case}, expected UPPER_INTERVAL"
                )));
            }
            // t.knot carries the toggled orientation, so this already negates
            rot_peaks_in(&t.space, &t.knot, dual_case, &dual_hops)
        }
        Region::LowerOpen(_) => {
            let (_, witnesses) = max_twisting_in(l, k, case, hops)?;
            let mut values = Vec::with_capacity(witnesses.len());
            for w in &witnesses {
                let (s, t) = w.as_neg_frac();
                values.push(rot_from_slope(l, k, s, t)?);
            }
            if values.windows(2).any(|v| v[0] != v[1]) {
                return Err(Error::InvariantViolation(format!(
                    "witness slopes disagree on rot for {k} in {l}: {values:?}"
                )));
            }
            // rot_from_slope used the literal orientation already
            values.truncate(1);
            Ok(values)
        }
        _ => unreachable!("out-of-scope regions rejected above"),
    }
}

/// The `2m` peak rotation numbers for `b/a ∈ (−1, 0)`, `b >= 2`:
/// `a + b(1+q)/p + 2b(k−1)` and `−a + b(1+q)/p − 2bk` for `k = 1..=m`,
/// `m = ⌊|a|/b⌋`.
fn upper_peaks(l: &LensSpace, a: i64, b: i64) -> Result<Vec<Rational>> {
    let m = -a / b;
    let c = offset(l, b)?;
    let mut out = Vec::with_capacity(2 * m as usize);
    for k in 1..=m {
        let up = exact::add(a, exact::mul(2 * b, k - 1)?)?;
        let down = exact::sub(-a, exact::mul(2 * b, k)?)?;
        out.push(c.try_add(Rational::from_int(up))?);
        out.push(c.try_add(Rational::from_int(down))?);
    }
    Ok(out)
}

/// Options for [`classify_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Report invariants for the conjugate universally tight structure
    /// (all rotation numbers negated).
    pub conjugate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub space: LensSpace,
    pub knot: KnotClass,
    pub case: CaseTag,
    pub order_r: i64,
    pub tw_max: Option<i64>,
    pub tb_max: Option<Rational>,
    pub rot_peaks: Vec<Rational>,
    /// Some dividing slopes at which the maximum is realized (not
    /// necessarily all of them).
    pub witness_slopes: Vec<Slope>,
    pub in_scope: bool,
    pub notes: Vec<String>,
}

pub fn classify(l: &LensSpace, k: &KnotClass) -> Result<ClassificationReport> {
    classify_with(l, k, ClassifyOptions::default())
}

pub fn classify_with(l: &LensSpace, k: &KnotClass, opts: ClassifyOptions) -> Result<ClassificationReport> {
    let hops = hop_sequence(l)?;
    let case = case_with_hops(l, k, &hops)?;
    let mut report = ClassificationReport {
        space: *l,
        knot: *k,
        case,
        order_r: order_of(l, k),
        tw_max: None,
        tb_max: None,
        rot_peaks: vec![],
        witness_slopes: vec![],
        in_scope: case.in_scope(),
        notes: vec![],
    };
    if !report.in_scope {
        report.notes.push(out_of_scope_note(case).to_string());
        return Ok(report);
    }

    let (tw, witnesses) = max_twisting_in(l, k, case, &hops)?;
    let tb = tb_from_twisting(l, k.a, k.b, tw)?;
    if case.region == Region::DualInterval {
        let t = transform_knot(l, k)?;
        let via_dual = tb_from_twisting(&t.space, t.knot.a, t.knot.b, 0)?;
        if via_dual != tb {
            return Err(Error::InvariantViolation(format!(
                "tb of {k} in {l} is {tb} directly but {via_dual} in dual coordinates"
            )));
        }
    }
    let mut peaks = rot_peaks_in(l, k, case, &hops)?;
    if opts.conjugate {
        peaks = peaks.into_iter().map(Rational::try_neg).collect::<Result<_>>()?;
        peaks.sort();
    }
    check_peaks(l, k, case, &peaks)?;

    report.tw_max = Some(tw);
    report.tb_max = Some(tb);
    report.rot_peaks = peaks;
    report.witness_slopes = witnesses;
    if let Region::LowerOpen(LowerPosition::OnVertex(_)) = case.region {
        report.notes.push("witness slopes are some valid dividing slopes, not necessarily all".into());
    }
    if k.orientation_flipped {
        report.notes.push("orientation reversed: rotation numbers negated".into());
    }
    if opts.conjugate {
        report.notes.push("conjugate contact structure: rotation numbers negated".into());
    }
    Ok(report)
}

/// `tw + a·b + b²·q/p`.
pub fn tb_from_twisting(l: &LensSpace, a: i64, b: i64, tw: i64) -> Result<Rational> {
    let ab = exact::mul(a, b)?;
    let b2q = exact::mul(exact::mul(b, b)?, l.q)?;
    Rational::new(b2q, l.p)?.try_add(Rational::from_int(exact::add(tw, ab)?))
}

fn check_peaks(l: &LensSpace, k: &KnotClass, case: CaseTag, peaks: &[Rational]) -> Result<()> {
    let r = order_of(l, k);
    let fail = |what: &str| Err(Error::InvariantViolation(format!("peaks of {k} in {l}: {what}")));
    if peaks.is_empty() {
        return fail("empty");
    }
    for p in peaks {
        if !p.try_mul_int(r)?.is_integer() {
            return fail("r·rot not integral");
        }
    }
    for w in peaks.windows(2) {
        match w[1].try_sub(w[0])?.to_integer() {
            Some(d) if d % 2 == 0 => {}
            _ => return fail("peak differences not even"),
        }
    }
    let expected = match case.region {
        Region::UpperInterval | Region::DualInterval => None,
        _ => Some(1),
    };
    if expected.is_some_and(|n| n != peaks.len()) {
        return fail("expected a single peak");
    }
    Ok(())
}

fn out_of_scope_note(case: CaseTag) -> &'static str {
    if case.rational_unknot {
        return "rational unknot (b = ±1): classified by Eliashberg-Fraser, not by this tool";
    }
    match case.region {
        Region::Mu1Unknot => "unknot ±μ1 (b/a = 0): classified by Eliashberg-Fraser",
        Region::Mu2Unknot => "unknot ±μ2 (b/a = -p/q): classified by Eliashberg-Fraser",
        Region::Fiber => "fiber class (b/a = -inf): isotopic to -K(1,1), a positive torus knot classified by Onaran",
        Region::PositiveKnot => "positive torus knot: classified by Onaran",
        _ => "out of scope",
    }
}
