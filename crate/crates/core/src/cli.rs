//! Command-line front end. Exit codes: 0 when every verdict holds, 1 on a
//! verification failure, 2 on usage or input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::adamsk::{c_vector, ku_progression_check, AdamsFamily, FamilyKind};
use crate::arith::{check_q, find_q, is_p_local_int, parse_rational, val_p, ArithError, Prime, Rational};
use crate::centre::{scan_stabilization, verify_centre, CentreConfig, CentreError};
use crate::fgl::BPContext;
use crate::hopf::HopfAlgebroid;
use crate::lattice::{solve, SystemInput};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(name = "bpcentre", version, about = "Exact checks of BP and K-theory operation congruences")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Gaussian congruence rows C_0..C_n, optionally checked against a sequence.
    Congruences {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: Option<i64>,
        /// JSON array of exact rationals mu_0, mu_1, ...
        #[arg(long)]
        mu: Option<PathBuf>,
    },
    /// Expands an action sequence in one of the Adams families.
    BasisExpand {
        #[arg(long)]
        family: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: Option<i64>,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// The right unit on a monomial in v_1, v_2, ...
    #[command(name = "bp-etaR")]
    BpEtaR {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        weight: u32,
        /// e.g. "v1^2*v2" or "1"
        #[arg(long)]
        monomial: String,
    },
    /// The element d_n and its congruence vector.
    BpDn {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        weight: Option<u32>,
    },
    /// Runs the centre pipeline for n = 0..N.
    VerifyCentre {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long)]
        weight: Option<u32>,
        #[arg(long)]
        q: Option<i64>,
        /// Include wall-clock timings (makes output run-dependent).
        #[arg(long)]
        timings: bool,
    },
    /// Solves a congruence system given as JSON.
    Lattice {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        p: Option<u64>,
        /// JSON array to test for membership.
        #[arg(long)]
        member: Option<PathBuf>,
    },
    /// Projected BP lattice against the Adams lattice for growing weight.
    ScanStabilization {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_weight: u32,
    },
    /// Exploratory: ku lattice against progression-wise g congruences.
    KuProgressions {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
    },
}

/// An error carrying its exit code.
#[derive(Debug)]
struct Exit {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Exit {
    Exit { code: 2, message: message.into() }
}

impl From<ArithError> for Exit {
    fn from(e: ArithError) -> Self {
        usage(e.to_string())
    }
}

impl From<CentreError> for Exit {
    fn from(e: CentreError) -> Self {
        match e {
            CentreError::Arith(a) => usage(a.to_string()),
            other => Exit { code: 1, message: other.to_string() },
        }
    }
}

/// Rendered command output and whether all verdicts held.
struct Output {
    json: Value,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    pretty: String,
    ok: bool,
}

impl Output {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8 fields")
            }
            Format::Pretty => self.pretty.clone(),
        }
    }
}

/// Parses `args` (including the program name), writes to `out`/`err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.render(cli.format).as_bytes());
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message);
            e.code
        }
    }
}

fn prime(p: u64) -> Result<Prime, Exit> {
    Ok(Prime::new(p)?)
}

fn odd_q(p: Prime, q: Option<i64>) -> Result<i64, Exit> {
    if !p.is_odd() {
        return Err(usage("this command needs an odd prime"));
    }
    Ok(match q {
        Some(q) => check_q(p, q)?,
        None => find_q(p).q(),
    })
}

fn execute(cmd: &Command) -> Result<Output, Exit> {
    match cmd {
        Command::Congruences { p, n, q, mu } => congruences(prime(*p)?, *n, *q, mu.as_deref()),
        Command::BasisExpand { family, p, q, input } => basis_expand(family, prime(*p)?, *q, input),
        Command::BpEtaR { p, weight, monomial } => bp_eta_r(prime(*p)?, *weight, monomial),
        Command::BpDn { p, n, weight } => bp_dn(prime(*p)?, *n, *weight),
        Command::VerifyCentre { p, n, weight, q, timings } => {
            let p = prime(*p)?;
            if let Some(q) = q {
                odd_q(p, Some(*q))?;
            }
            let cfg = CentreConfig { p, n_max: *n, weight: *weight, q: *q, timings: *timings };
            centre(&cfg)
        }
        Command::Lattice { system, p, member } => lattice(system, *p, member.as_deref()),
        Command::ScanStabilization { p, n, max_weight } => scan(prime(*p)?, *n, *max_weight),
        Command::KuProgressions { p, n } => {
            let p = prime(*p)?;
            let r = ku_progression_check(p, *n).map_err(|e| usage(e.to_string()))?;
            let pretty = format!(
                "ku pivots:          {:?}\nprogression pivots: {:?}\nku in progressions: {}\nprogressions in ku: {}\n",
                r.ku_pivots, r.progression_pivots, r.ku_in_progressions, r.progressions_in_ku
            );
            let rows = vec![vec![
                r.p.to_string(),
                r.n.to_string(),
                r.ku_in_progressions.to_string(),
                r.progressions_in_ku.to_string(),
            ]];
            Ok(Output {
                json: to_json(&r),
                header: vec!["p".into(), "n".into(), "ku_in_progressions".into(), "progressions_in_ku".into()],
                rows,
                pretty,
                ok: true,
            })
        }
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

/// Reads a JSON array of exact rationals (strings "a/b" or integers).
pub fn read_sequence(path: &Path) -> Result<Vec<Rational>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_sequence(&text).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn parse_sequence(text: &str) -> Result<Vec<Rational>, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| format!("line {}, column {}: {e}", e.line(), e.column()))?;
    let arr = v.as_array().ok_or("expected a JSON array of rational strings")?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| match x {
            Value::String(s) => parse_rational(s).map_err(|e| format!("element [{i}]: {e}")),
            Value::Number(n) if n.is_i64() => Ok(crate::arith::int(n.as_i64().expect("checked"))),
            other => Err(format!("element [{i}]: expected an exact rational string, found {other}")),
        })
        .collect()
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn congruences(p: Prime, n: usize, q: Option<i64>, mu: Option<&Path>) -> Result<Output, Exit> {
    let q = odd_q(p, q)?;
    let mu = mu.map(read_sequence).transpose().map_err(usage)?;
    let mut json_rows = Vec::new();
    let mut rows = Vec::new();
    let mut pretty = format!("p = {p}, q = {q}\n");
    let mut ok = true;
    for r in 0..=n {
        let c = c_vector(p, q, r).map_err(|e| usage(e.to_string()))?;
        let verdict = mu.as_ref().map(|m| is_p_local_int(p, &c.apply(m)));
        ok &= verdict.unwrap_or(true);
        let entries = strings(&c.entries);
        let _ = write!(pretty, "C_{r} = ({})", entries.join(", "));
        if let Some(v) = verdict {
            let _ = write!(pretty, "  {}", if v { "ok" } else { "FAIL" });
        }
        pretty.push('\n');
        let mut row = vec![r.to_string(), entries.join(" ")];
        if let Some(v) = verdict {
            row.push(v.to_string());
        }
        rows.push(row);
        let mut obj = json!({ "r": r, "entries": entries });
        if let Some(v) = verdict {
            obj["satisfied"] = json!(v);
        }
        json_rows.push(obj);
    }
    let mut header = vec!["r".to_string(), "entries".to_string()];
    if mu.is_some() {
        header.push("satisfied".into());
    }
    Ok(Output { json: json!({ "p": p.get(), "q": q, "rows": json_rows }), header, rows, pretty, ok })
}

fn basis_expand(family: &str, p: Prime, q: Option<i64>, input: &Path) -> Result<Output, Exit> {
    let kind: FamilyKind = family.parse().map_err(|e: crate::adamsk::AdamsError| usage(e.to_string()))?;
    let f = AdamsFamily::new(kind, p, q).map_err(|e| usage(e.to_string()))?;
    let lambda = read_sequence(input).map_err(usage)?;
    let e = f.expand(&lambda);
    let coeffs = strings(&e.coefficients);
    let mut pretty = format!("family {kind}, p = {p}\n");
    for (n, c) in coeffs.iter().enumerate() {
        let _ = writeln!(pretty, "a_{n} = {c}");
    }
    let _ = writeln!(pretty, "integral: {}", e.integral);
    let rows = coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| vec![n.to_string(), c.clone(), val_p(p, &e.coefficients[n]).to_string()])
        .collect();
    Ok(Output {
        json: json!({ "family": kind, "p": p.get(), "q": f.q(), "coefficients": coeffs, "integral": e.integral }),
        header: vec!["n".into(), "a_n".into(), "valuation".into()],
        rows,
        pretty,
        ok: e.integral,
    })
}

fn bp_eta_r(p: Prime, weight: u32, monomial: &str) -> Result<Output, Exit> {
    let ctx = BPContext::new(p, None, weight).map_err(|e| usage(e.to_string()))?;
    let alpha = if monomial.trim() == "1" {
        vec![0; ctx.num_gens()]
    } else {
        ctx.v_table().parse_monomial(monomial).map_err(|e| usage(e.to_string()))?
    };
    let hopf = HopfAlgebroid::new(ctx).map_err(|e| usage(e.to_string()))?;
    let image = hopf.eta_r_v(&alpha).map_err(|e| usage(e.to_string()))?;
    let n = hopf.context().num_gens();
    let vt = hopf.context().vt_table().clone();
    let mut rows = Vec::new();
    let mut json_terms = Vec::new();
    let mut integral = true;
    for (e, c) in image.sorted_terms() {
        let text = |m: String| if m.is_empty() { "1".to_string() } else { m };
        let beta = text(crate::polyring::monomial_text(&vt, &[&e[..n], &vec![0; n][..]].concat()));
        let gamma = text(crate::polyring::monomial_text(&vt, &[&vec![0; n][..], &e[n..]].concat()));
        integral &= is_p_local_int(p, c);
        rows.push(vec![beta.clone(), gamma.clone(), c.to_string()]);
        json_terms.push(json!({ "beta": beta, "gamma": gamma, "coefficient": c.to_string() }));
    }
    let pretty = format!("eta_R({monomial}) = {image}\nall coefficients p-integral: {integral}\n");
    Ok(Output {
        json: json!({ "p": p.get(), "weight": weight, "monomial": monomial, "image": image.to_string(), "terms": json_terms, "integral": integral }),
        header: vec!["beta".into(), "gamma".into(), "coefficient".into()],
        rows,
        pretty,
        ok: integral,
    })
}

fn bp_dn(p: Prime, n: u64, weight: Option<u32>) -> Result<Output, Exit> {
    let needed = crate::arith::delta_p(p, n) as u32;
    let w = weight.unwrap_or(needed).max(needed);
    let ctx = BPContext::new(p, None, w).map_err(|e| usage(e.to_string()))?;
    let hopf = HopfAlgebroid::new(ctx).map_err(|e| usage(e.to_string()))?;
    let d = hopf.construct_d(n).map_err(|e| Exit { code: 1, message: e.to_string() })?;
    let rec = d.record();
    let rows = rec
        .coefficients
        .iter()
        .zip(&rec.valuations)
        .enumerate()
        .map(|(j, (c, v))| vec![j.to_string(), c.clone(), v.clone()])
        .collect();
    Ok(Output {
        json: to_json(&rec),
        header: vec!["j".into(), "d_nj".into(), "valuation".into()],
        rows,
        pretty: rec.to_text(),
        ok: true,
    })
}

fn centre(cfg: &CentreConfig) -> Result<Output, Exit> {
    let report = verify_centre(cfg)?;
    let mut pretty = format!("p = {}, n <= {}, W = {}\n", report.p, report.n_max, report.weight);
    for w in &report.warnings {
        let _ = writeln!(pretty, "warning: {w}");
    }
    let mut rows = Vec::new();
    for r in &report.rows {
        let _ = writeln!(pretty, "n = {}: pivots {:?}, C_n^BP = ({})", r.n, r.pivots_adams, r.c_bp.join(", "));
        let _ = writeln!(
            pretty,
            "  S_n^BP = S_n^g: {}   (sampled BP pivots {:?}, sandwich {})",
            if r.equal { "OK" } else { "FAIL" },
            r.pivots_bp_sample,
            if r.sandwich.equal { "OK" } else { "FAIL" }
        );
        rows.push(vec![
            r.n.to_string(),
            format!("{:?}", r.pivots_adams),
            r.c_bp.join(" "),
            format!("{:?}", r.pivots_bp_sample),
            r.included_in_sample.to_string(),
            r.sandwich.equal.to_string(),
            r.equal.to_string(),
        ]);
    }
    let _ = writeln!(pretty, "full-weight inclusion: {}", ok_text(report.full_weight_inclusion));
    let _ = writeln!(pretty, "Adams realizability: {}", ok_text(report.realizable));
    let _ = writeln!(pretty, "verdict: {}", ok_text(report.verdict));
    if let Some(t) = &report.timings_ms {
        for (k, ms) in t {
            let _ = writeln!(pretty, "  {k}: {ms:.1} ms");
        }
    }
    Ok(Output {
        json: to_json(&report),
        header: ["n", "pivots", "c_bp", "bp_sample_pivots", "included", "sandwich", "equal"].map(String::from).to_vec(),
        rows,
        pretty,
        ok: report.verdict,
    })
}

fn ok_text(b: bool) -> &'static str {
    if b {
        "OK"
    } else {
        "FAIL"
    }
}

fn lattice(system: &Path, p: Option<u64>, member: Option<&Path>) -> Result<Output, Exit> {
    let text = std::fs::read_to_string(system).map_err(|e| usage(format!("{}: {e}", system.display())))?;
    let input: SystemInput = match serde_json::from_str::<SystemInput>(&text) {
        Ok(i) => i,
        Err(first) => match serde_json::from_str::<Vec<Vec<String>>>(&text) {
            Ok(rows) => SystemInput { p: None, n: None, rows },
            Err(_) => {
                return Err(usage(format!(
                    "{}: line {}, column {}: {first}",
                    system.display(),
                    first.line(),
                    first.column()
                )))
            }
        },
    };
    let sys = input.into_system(p).map_err(|e| usage(format!("{}: {e}", system.display())))?;
    let l = solve(&sys);
    let mut rec = to_json(&l.record());
    let mut pretty = l.to_text();
    let mut ok = true;
    if let Some(path) = member {
        let mu = read_sequence(path).map_err(usage)?;
        if mu.len() != sys.n() + 1 {
            return Err(usage(format!("{}: expected {} entries, found {}", path.display(), sys.n() + 1, mu.len())));
        }
        ok = l.contains(&mu);
        rec["member"] = json!(ok);
        let _ = writeln!(pretty, "member: {ok}");
    }
    let dim = l.n() + 1;
    let rows = (0..dim).map(|i| (0..dim).map(|j| l.columns()[j][i].to_string()).collect()).collect();
    Ok(Output { json: rec, header: (0..dim).map(|j| format!("b{j}")).collect(), rows, pretty, ok })
}

fn scan(p: Prime, n: usize, max_weight: u32) -> Result<Output, Exit> {
    let s = scan_stabilization(p, n, max_weight)?;
    let mut pretty = format!("p = {}, n = {}, Adams pivots {:?}\n", s.p, s.n, s.adams_pivots);
    let mut rows = Vec::new();
    for pt in &s.points {
        let _ = writeln!(
            pretty,
            "W = {:>2}: {:>4} rows, pivots {:?} {}",
            pt.weight,
            pt.bp_rows,
            pt.pivots,
            if pt.equals_adams { "=" } else { "" }
        );
        rows.push(vec![
            pt.weight.to_string(),
            pt.bp_rows.to_string(),
            format!("{:?}", pt.pivots),
            pt.equals_adams.to_string(),
        ]);
    }
    match s.stable_from {
        Some(w) => {
            let _ = writeln!(pretty, "equal to the Adams lattice from W = {w}");
        }
        None => {
            let _ = writeln!(pretty, "not yet equal at W = {max_weight}");
        }
    }
    Ok(Output {
        json: to_json(&s),
        header: vec!["weight".into(), "rows".into(), "pivots".into(), "equals_adams".into()],
        rows,
        pretty,
        ok: true,
    })
}
