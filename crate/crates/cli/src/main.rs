use std::fmt::Write as _;
use std::io::IsTerminal;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lenslk::audit::{self, Tally};
use lenslk::exact::gcd;
use lenslk::farey::cf_expand;
use lenslk::par::map_ordered;
use lenslk::range::{coincidence_note, sl_values};
use lenslk::report::{parse_record, run_batch, to_json_pretty, OutputFormat};
use lenslk::{
    classify_with, decide_equiv, hop_sequence, render_range, ClassificationReport, ClassifyOptions, Error,
    KnotClass, LensSpace, MountainRange, Rational, Result,
};

#[derive(Parser)]
#[command(name = "lenslk", version, about = "Legendrian negative torus knots in universally tight lens spaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args, Clone, Copy)]
struct KnotArgs {
    #[arg(long)]
    p: i64,
    #[arg(long)]
    q: i64,
    #[arg(long, allow_hyphen_values = true)]
    a: i64,
    #[arg(long, allow_hyphen_values = true)]
    b: i64,
    /// Use the conjugate contact structure (rotation numbers negated).
    #[arg(long)]
    conjugate: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Case, order, maximal twisting, tb and rotation peaks of one knot.
    Classify {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long)]
        json: bool,
    },
    /// Negative continued fraction of a rational below -1.
    Cf {
        #[arg(long, allow_hyphen_values = true)]
        value: Rational,
    },
    /// Shortest hop sequence from -inf to -p/q with its delta slopes.
    Hopseq {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// Mountain range down to the given stabilization depth.
    Mountain {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value_t = 3)]
        depth: i64,
        /// Also write the diagram as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Decide whether two Legendrian knots given as "P Q A B TB ROT" agree.
    Equiv {
        #[arg(long, allow_hyphen_values = true)]
        knot1: String,
        #[arg(long, allow_hyphen_values = true)]
        knot2: String,
    },
    /// Self-linking numbers of transverse push-offs.
    Sl {
        #[command(flatten)]
        knot: KnotArgs,
        #[arg(long, default_value_t = 3)]
        depth: i64,
    },
    /// Classify every "p q a b [tb rot]" line of a file.
    Batch {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare closed forms with brute-force oracles.
    Oracle {
        #[arg(long)]
        p: Option<i64>,
        #[arg(long)]
        q: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<i64>,
        /// Audit every L(p,q) with p up to this bound and every knot with
        /// |a|, b up to the same bound.
        #[arg(long)]
        sweep: Option<i64>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn color_enabled() -> bool {
    std::env::var("LENSLK_COLOR").map_or(true, |v| v != "0") && std::io::stdout().is_terminal()
}

fn report_for(k: &KnotArgs) -> Result<ClassificationReport> {
    let l = LensSpace::new(k.p, k.q)?;
    let knot = KnotClass::new(k.a, k.b)?;
    classify_with(&l, &knot, ClassifyOptions { conjugate: k.conjugate })
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn plain_report(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let dash = |x: Option<String>| x.unwrap_or_else(|| "-".into());
    let _ = writeln!(s, "space: {} (p'={}, q'={})", r.space, r.space.p_std, r.space.q_std);
    let _ = writeln!(s, "knot: {}", r.knot);
    let _ = writeln!(s, "case: {}", r.case);
    let _ = writeln!(s, "order: {}", r.order_r);
    let _ = writeln!(s, "in_scope: {}", r.in_scope);
    let _ = writeln!(s, "tw_max: {}", dash(r.tw_max.map(|x| x.to_string())));
    let _ = writeln!(s, "tb_max: {}", dash(r.tb_max.map(|x| x.to_string())));
    let _ = writeln!(s, "rot_peaks: {}", list(&r.rot_peaks));
    let witnesses: Vec<String> = r.witness_slopes.iter().map(|w| w.chart().to_string()).collect();
    let _ = writeln!(s, "witness_slopes: {}", list(&witnesses));
    for n in &r.notes {
        let _ = writeln!(s, "note: {n}");
    }
    s
}

fn parse_query(arg: &str) -> Result<(ClassificationReport, (Rational, Rational))> {
    let rec = parse_record(0, arg).map_err(|m| m.error)?;
    let query = rec.query.ok_or(Error::Parse { input: arg.into(), reason: "expected P Q A B TB ROT" })?;
    let l = LensSpace::new(rec.p, rec.q)?;
    let r = classify_with(&l, &KnotClass::new(rec.a, rec.b)?, ClassifyOptions::default())?;
    Ok((r, query))
}

fn oracle_sweep(bound: i64, jobs: usize) -> Result<Tally> {
    let mut spaces = vec![];
    for p in 2..=bound {
        for q in 1..p {
            if gcd(p, q) == 1 {
                spaces.push(LensSpace::new(p, q)?);
            }
        }
    }
    let per_space = map_ordered(&spaces, jobs, |l| -> Result<Tally> {
        let mut t = Tally::default();
        t.add(audit::std_pair(l)?);
        t.add(audit::hops(l)?);
        for a in -bound..=bound {
            for b in 1..=bound {
                if gcd(a, b) == 1 {
                    t.add(audit::twisting(l, &KnotClass::new(a, b)?)?);
                }
            }
        }
        Ok(t)
    });
    per_space.into_iter().try_fold(Tally::default(), |acc, t| Ok(acc.merge(t?)))
}

fn run(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Classify { knot, json } => {
            let r = report_for(&knot)?;
            if json {
                println!("{}", to_json_pretty(&r));
            } else {
                print!("{}", plain_report(&r));
            }
        }
        Cmd::Cf { value } => {
            let c = cf_expand(value)?;
            let (x, y) = c.matrix_vector()?;
            let back = Rational::new(y, x)?;
            println!("{c}");
            let status = if back == value { "ok" } else { "FAILED" };
            println!("matrix check: ({x}, {y}) -> {back} {status}");
            if back != value {
                return Err(Error::InvariantViolation(format!("matrix product gives {back}, expected {value}")));
            }
        }
        Cmd::Hopseq { p, q } => {
            let l = LensSpace::new(p, q)?;
            println!("{}", hop_sequence(&l)?);
        }
        Cmd::Mountain { knot, depth, svg } => {
            let r = report_for(&knot)?;
            if !r.in_scope {
                print!("{}", plain_report(&r));
                return Ok(0);
            }
            let d = render_range(&MountainRange::from_report(&r)?, depth)?;
            print!("{}", d.text_styled(color_enabled()));
            if let Some(path) = svg {
                std::fs::write(&path, d.svg())
                    .map_err(|e| Error::OutOfDomain(format!("cannot write {}: {e}", path.display())))?;
            }
        }
        Cmd::Equiv { knot1, knot2 } => {
            let (r1, x1) = parse_query(&knot1)?;
            let (r2, x2) = parse_query(&knot2)?;
            println!("{}", decide_equiv(&r1, x1, &r2, x2)?);
            if let Some(n) = coincidence_note(&r1, &r2) {
                println!("note: {n}");
            }
        }
        Cmd::Sl { knot, depth } => {
            let r = report_for(&knot)?;
            let (max, values) = sl_values(&r, depth)?;
            println!("sl_max: {max}");
            println!("sl: {}", list(&values));
        }
        Cmd::Batch { input, out, jobs, format } => {
            let text = std::fs::read_to_string(&input)
                .map_err(|e| Error::OutOfDomain(format!("cannot read {}: {e}", input.display())))?;
            let format = match format {
                Format::Json => OutputFormat::Json,
                Format::Tsv => OutputFormat::Tsv,
            };
            let result = run_batch(&text, jobs, format);
            std::fs::write(&out, result.text(format))
                .map_err(|e| Error::OutOfDomain(format!("cannot write {}: {e}", out.display())))?;
            for m in &result.failures {
                eprintln!("line {}: error[{}]: {}", m.line, m.error.kind(), m.error);
            }
            return Ok(result.exit_code());
        }
        Cmd::Oracle { p, q, a, b, sweep, jobs } => {
            if let Some(bound) = sweep {
                let t = oracle_sweep(bound, jobs)?;
                println!("agree: {}  skipped: {}  mismatches: {}", t.agree, t.skipped, t.mismatches.len());
                for m in &t.mismatches {
                    println!("MISMATCH: {m}");
                }
                return Ok(if t.mismatches.is_empty() { 0 } else { 5 });
            }
            let (Some(p), Some(q)) = (p, q) else {
                return Err(Error::Parse { input: "oracle".into(), reason: "need --p and --q, or --sweep" });
            };
            let l = LensSpace::new(p, q)?;
            let mut outcomes = vec![("std_pair", audit::std_pair(&l)?), ("hops", audit::hops(&l)?)];
            if let (Some(a), Some(b)) = (a, b) {
                outcomes.push(("twisting", audit::twisting(&l, &KnotClass::new(a, b)?)?));
            }
            for (name, o) in &outcomes {
                println!("{name}: {o}");
            }
            return Ok(if outcomes.iter().any(|(_, o)| o.is_mismatch()) { 5 } else { 0 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error[{}]: {e}", e.kind());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
