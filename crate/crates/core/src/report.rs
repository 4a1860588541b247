//! Wire formats: the JSON form of a classification report and the batch
//! pipeline from whitespace-separated records to JSON lines or TSV.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Rational, Slope};
use crate::invariants::{classify, ClassificationReport};
use crate::lens::{KnotClass, LensSpace};
use crate::par::map_ordered;
use crate::range::MountainRange;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub p: i64,
    pub q: i64,
    pub p_prime: i64,
    pub q_prime: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotJson {
    pub a: i64,
    pub b: i64,
    pub case: String,
    pub order: i64,
    pub in_scope: bool,
}

#[derive(Serialize)]
struct ErrorJson {
    line: usize,
    error: &'static str,
    reason: String,
}

/// Result of a realizability query attached to a batch record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryJson {
    pub tb: Rational,
    pub rot: Rational,
    pub realized: Option<bool>,
}

/// Field order here is the canonical key order on the wire.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub space: SpaceJson,
    pub knot: KnotJson,
    pub tw_max: Option<i64>,
    pub tb_max: Option<Rational>,
    pub rot_peaks: Vec<Rational>,
    pub witness_slopes: Vec<Slope>,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub query: Option<QueryJson>,
}

impl From<&ClassificationReport> for ReportJson {
    fn from(r: &ClassificationReport) -> Self {
        let (a, b) = r.knot.literal();
        ReportJson {
            space: SpaceJson { p: r.space.p, q: r.space.q, p_prime: r.space.p_std, q_prime: r.space.q_std },
            knot: KnotJson { a, b, case: r.case.to_string(), order: r.order_r, in_scope: r.in_scope },
            tw_max: r.tw_max,
            tb_max: r.tb_max,
            rot_peaks: r.rot_peaks.clone(),
            witness_slopes: r.witness_slopes.clone(),
            notes: r.notes.clone(),
            query: None,
        }
    }
}

pub fn to_json(r: &ClassificationReport) -> String {
    serde_json::to_string(&ReportJson::from(r)).expect("report serializes")
}

pub fn to_json_pretty(r: &ClassificationReport) -> String {
    serde_json::to_string_pretty(&ReportJson::from(r)).expect("report serializes")
}

/// One data line of a batch file: `p q a b [tb rot]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchRecord {
    pub line: usize,
    pub p: i64,
    pub q: i64,
    pub a: i64,
    pub b: i64,
    pub query: Option<(Rational, Rational)>,
}

/// A data line that could not be parsed, with its 1-based line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Malformed {
    pub line: usize,
    pub error: Error,
}

pub fn parse_record(line: usize, text: &str) -> std::result::Result<BatchRecord, Malformed> {
    let bad = |error| Malformed { line, error };
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 4 && fields.len() != 6 {
        return Err(bad(Error::parse(text, "expected 4 or 6 fields: p q a b [tb rot]")));
    }
    let int = |s: &str| s.parse::<i64>().map_err(|_| bad(Error::parse(s, "not an integer")));
    let query = if fields.len() == 6 {
        let tb = fields[4].parse::<Rational>().map_err(bad)?;
        let rot = fields[5].parse::<Rational>().map_err(bad)?;
        Some((tb, rot))
    } else {
        None
    };
    Ok(BatchRecord {
        line,
        p: int(fields[0])?,
        q: int(fields[1])?,
        a: int(fields[2])?,
        b: int(fields[3])?,
        query,
    })
}

/// Data lines of a batch file; `#` starts a comment, blank lines are skipped.
pub fn parse_batch(text: &str) -> Vec<std::result::Result<BatchRecord, Malformed>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then(|| parse_record(i + 1, body))
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Tsv,
}

pub const TSV_HEADER: &str =
    "#line\tp\tq\ta\tb\tcase\torder\tin_scope\ttw_max\ttb_max\trot_peaks\twitness_slopes\trealized";

/// Classifies one record; the report carries the query answer, if any.
pub fn evaluate(rec: &BatchRecord) -> Result<ReportJson> {
    let l = LensSpace::new(rec.p, rec.q)?;
    let k = KnotClass::new(rec.a, rec.b)?;
    let report = classify(&l, &k)?;
    let mut json = ReportJson::from(&report);
    if let Some((tb, rot)) = rec.query {
        let realized = if report.in_scope {
            Some(MountainRange::from_report(&report)?.contains(tb, rot))
        } else {
            None
        };
        json.query = Some(QueryJson { tb, rot, realized });
    }
    Ok(json)
}

fn join<T: ToString>(xs: &[T]) -> String {
    if xs.is_empty() {
        "-".into()
    } else {
        xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
    }
}

fn opt<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".into(), T::to_string)
}

fn format_ok(line: usize, r: &ReportJson, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string(r).expect("report serializes"),
        OutputFormat::Tsv => {
            let realized = match &r.query {
                None => "-".to_string(),
                Some(q) => opt(&q.realized),
            };
            let witnesses: Vec<String> = r.witness_slopes.iter().map(|s| s.chart().to_string()).collect();
            format!(
                "{line}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{realized}",
                r.space.p,
                r.space.q,
                r.knot.a,
                r.knot.b,
                r.knot.case,
                r.knot.order,
                r.knot.in_scope,
                opt(&r.tw_max),
                opt(&r.tb_max),
                join(&r.rot_peaks),
                join(&witnesses),
            )
        }
    }
}

fn format_err(line: usize, e: &Error, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => serde_json::to_string(&ErrorJson { line, error: e.kind(), reason: e.to_string() })
            .expect("error record serializes"),
        OutputFormat::Tsv => format!("{line}\terror[{}]\t{}", e.kind(), e.to_string().replace('\t', " ")),
    }
}

/// Output of [`run_batch`]: one line per data line of the input, in input
/// order, plus the failures for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BatchOutput {
    pub lines: Vec<String>,
    pub failures: Vec<Malformed>,
}

impl BatchOutput {
    /// The most severe exit status among the failures, or 0.
    pub fn exit_code(&self) -> i32 {
        self.failures.iter().map(|m| m.error.exit_code()).max().unwrap_or(0)
    }

    pub fn text(&self, format: OutputFormat) -> String {
        let mut out = String::new();
        if format == OutputFormat::Tsv {
            out.push_str(TSV_HEADER);
            out.push('\n');
        }
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}

pub fn run_batch(text: &str, jobs: usize, format: OutputFormat) -> BatchOutput {
    let parsed = parse_batch(text);
    let results = map_ordered(&parsed, jobs, |item| match item {
        Ok(rec) => match evaluate(rec) {
            Ok(r) => Ok(format_ok(rec.line, &r, format)),
            Err(error) => Err(Malformed { line: rec.line, error }),
        },
        Err(m) => Err(m.clone()),
    });
    let mut out = BatchOutput { lines: Vec::with_capacity(results.len()), failures: vec![] };
    for r in results {
        match r {
            Ok(line) => out.lines.push(line),
            Err(m) => {
                out.lines.push(format_err(m.line, &m.error, format));
                out.failures.push(m);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example_json() {
        let r = classify(&LensSpace::new(8, 5).unwrap(), &KnotClass::new(-3, 7).unwrap()).unwrap();
        let j = to_json(&r);
        assert!(j.starts_with(r#"{"space":{"p":8,"q":5,"p_prime":3,"q_prime":2},"knot":{"a":-3,"b":7,"#), "{j}");
        assert!(j.contains(r#""tw_max":-4,"tb_max":"45/8","rot_peaks":["-7/4"],"witness_slopes":["-1"]"#), "{j}");
        let back: ReportJson = serde_json::from_str(&j).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), j);
    }

    #[test]
    fn parsing() {
        let text = "# header\n8 5 -3 7\n\n8 5 -3 7 45/8 -7/4  # query\n8 5 x 7\n8 5 -3\n";
        let recs = parse_batch(text);
        assert_eq!(recs.len(), 4);
        assert_eq!(recs[0].as_ref().unwrap().line, 2);
        assert_eq!(
            recs[1].as_ref().unwrap().query,
            Some(("45/8".parse().unwrap(), "-7/4".parse().unwrap()))
        );
        assert_eq!(recs[2].as_ref().unwrap_err().line, 5);
        assert_eq!(recs[3].as_ref().unwrap_err().line, 6);
    }

    #[test]
    fn batch_continues_past_bad_lines() {
        let text = "8 5 -3 7 41/8 -7/4\n8 4 -3 7\n2 1 0 1\n";
        let out = run_batch(text, 1, OutputFormat::Json);
        assert_eq!(out.lines.len(), 3);
        assert!(out.lines[0].contains(r#""query":{"tb":"41/8","rot":"-7/4","realized":false}"#));
        assert!(out.lines[1].starts_with(r#"{"line":2,"error":"invalid-lens""#));
        assert!(out.lines[2].contains(r#""in_scope":false"#));
        assert_eq!(out.exit_code(), 2);
        let tsv = run_batch(text, 1, OutputFormat::Tsv).text(OutputFormat::Tsv);
        assert!(tsv.lines().nth(1).unwrap().starts_with("1\t8\t5\t-3\t7\tLOWER_OPEN"));
    }
}
