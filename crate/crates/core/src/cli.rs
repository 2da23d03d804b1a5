//! Command-line front end. Exit codes: 0 success, 1 a checked invariant was
//! violated, 2 bad usage or input.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::bounds::{self, BoundsError, Mode};
use crate::enumerator::{self, BoundTable, EnumerationOptions, WiringIter};
use crate::exact;
use crate::geometry;
use crate::inequalities::{self, Family};
use crate::io::{parse_arrangement, Arrangement};
use crate::profiles::{melchior_identity_residual, TiProfile};
use crate::spectrum;
use crate::wiring::CellComplex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "arrlab", version, about = "Exact combinatorics of line and pseudoline arrangements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// t_i, p_j and v/e/f of an arrangement file ("-" or no path reads stdin).
    Profile { path: Option<PathBuf> },
    /// Every inequality slack and bound check for an arrangement file.
    Check { path: Option<PathBuf> },
    /// Lower-bound certificates for n curves with maximum multiplicity m.
    Bounds {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        family: Option<Family>,
        #[arg(long, default_value = "paper_strict")]
        mode: Mode,
    },
    /// Achievable region counts, lacunae and d_n.
    Spectrum {
        #[arg(long)]
        n: u32,
    },
    /// A line arrangement with a prescribed region count.
    Witness {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        t: u32,
    },
    /// Every nontrivial wiring diagram on n wires, as JSON lines, or the
    /// aggregated check report with --verify.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        verify: bool,
        /// Raise the enumeration cap (default 6, or ARRLAB_NMAX).
        #[arg(long)]
        nmax: Option<u32>,
        /// Skip diagrams with a point of any of these multiplicities.
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<u32>,
        /// Keep only diagrams with the t-profile in this JSON file.
        #[arg(long)]
        ti: Option<PathBuf>,
    },
    /// Norms and angles of the inequality coefficient vectors.
    Vectors {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("violated: {0}")]
    Violation(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Violation(_) => 1,
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let mut out = String::new();
    let result = execute(&cli, &mut out);
    if let Err(e) = emit(cli.output.as_deref(), &out) {
        eprintln!("arrlab: {e}");
        return 2;
    }
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("arrlab: {e}");
            e.code()
        }
    }
}

fn emit(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn read_source(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(input)?;
            Ok(s)
        }
    }
}

fn json_line(out: &mut String, v: &Value) {
    out.push_str(&v.to_string());
    out.push('\n');
}

fn execute(cli: &Cli, out: &mut String) -> Result<(), CliError> {
    match &cli.command {
        Command::Profile { path } => profile(path.as_deref(), cli.format, out),
        Command::Check { path } => check(path.as_deref(), cli.format, out),
        Command::Bounds { n, m, family, mode } => bounds_cmd(*n, *m, *family, *mode, cli.format, out),
        Command::Spectrum { n } => spectrum_cmd(*n, cli.format, out),
        Command::Witness { n, k, t } => {
            let arr = geometry::construct_witness(*n, *k, *t).map_err(input)?;
            let file = arr.to_file().map_err(input)?;
            json_line(out, &serde_json::to_value(file).expect("line file serializes"));
            Ok(())
        }
        Command::Enumerate { n, verify, nmax, forbid, ti } => {
            enumerate_cmd(*n, *verify, *nmax, forbid, ti.as_deref(), cli.format, out)
        }
        Command::Vectors { n } => {
            let r = inequalities::inequality_vectors(*n).map_err(input)?;
            match cli.format {
                Format::Text => {
                    let norms: Vec<String> = r.squared_norms.iter().map(exact::to_text).collect();
                    let _ = writeln!(out, "n={} |N|^2 = {}", r.n, norms.join(", "));
                    let _ = writeln!(out, "cos(N1,N2)={} cos(N2,N3)={} cos(N1,N3)={}", r.cos_n1_n2, r.cos_n2_n3, r.cos_n1_n3);
                }
                _ => json_line(out, &serde_json::to_value(&r).expect("report serializes")),
            }
            Ok(())
        }
    }
}

fn load(path: Option<&Path>) -> Result<Arrangement, CliError> {
    parse_arrangement(&read_source(path)?).map_err(input)
}

fn profile(path: Option<&Path>, format: Format, out: &mut String) -> Result<(), CliError> {
    let arr = load(path)?;
    let n = arr.n();
    if let Arrangement::Lines(lines) = &arr {
        if lines.is_trivial() {
            let ti = lines.ti_profile().map_err(input)?;
            let s = ti.derive_vef().map_err(input)?;
            let v = json!({"kind": "lines", "n": n, "trivial": true, "t": ti.to_json_value()["t"],
                           "v": s.v, "e": s.e, "f": s.f});
            match format {
                Format::Text => {
                    let _ = writeln!(out, "lines, trivial\n{ti}\n{s}");
                }
                _ => json_line(out, &v),
            }
            return Ok(());
        }
    }
    let seq = arr.to_wiring().map_err(input)?;
    if seq.validate().map_err(input)?.trivial {
        return Err(CliError::Input("trivial wiring diagram: all wires meet in one point".into()));
    }
    let cc = CellComplex::build(&seq).map_err(|e| CliError::Violation(e.to_string()))?;
    let ti = cc.ti_profile().map_err(|e| CliError::Violation(e.to_string()))?;
    let pj = cc.pj_profile().map_err(|e| CliError::Violation(e.to_string()))?;
    let summary = cc.summary();
    let flags = cc.classify(&ti);

    let mut failures = Vec::new();
    if summary.euler_characteristic() != 1 {
        failures.push("v - e + f = 1");
    }
    if ti.derive_vef().ok() != Some(summary) {
        failures.push("v/e/f from t_i");
    }
    if pj.vef().ok() != Some(summary) {
        failures.push("v/e/f from p_j");
    }
    if melchior_identity_residual(&ti, &pj).ok() != Some(0) {
        failures.push("sum (3-i) t_i = 3 + sum (j-3) p_j");
    }
    if let Arrangement::Lines(lines) = &arr {
        if lines.ti_profile().ok().as_ref() != Some(&ti) {
            failures.push("t_i of the lines equals t_i of the sweep");
        }
    }

    match format {
        Format::Text => {
            let _ = writeln!(out, "{} {}\n{}\n{}\n{}", arr.kind(), ti, pj, summary, flags_text(&flags));
        }
        _ => {
            let v = json!({
                "kind": arr.kind(), "n": n, "trivial": false,
                "t": ti.to_json_value()["t"], "p": pj.to_json_value()["p"],
                "v": summary.v, "e": summary.e, "f": summary.f,
                "flags": flags,
            });
            json_line(out, &v);
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violation(failures.join("; ")))
    }
}

fn flags_text(f: &crate::wiring::Classification) -> String {
    format!("simplicial={} generic={} near_pencil={}", f.simplicial, f.generic, f.near_pencil)
}

fn opt_rational(q: &Option<num_rational::BigRational>) -> String {
    q.as_ref().map(exact::to_text).unwrap_or_else(|| "n/a".into())
}

fn check(path: Option<&Path>, format: Format, out: &mut String) -> Result<(), CliError> {
    let arr = load(path)?;
    let seq = arr.to_wiring().map_err(input)?;
    if seq.validate().map_err(input)?.trivial {
        return Err(CliError::Input("trivial arrangement: no inequality applies".into()));
    }
    let table = BoundTable::new(seq.n());
    let rec = enumerator::analyze(&seq, &table).map_err(CliError::Violation)?;
    let violations: Vec<&str> = rec.violations().collect();
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(&rec).expect("record serializes");
            v["kind"] = json!(arr.kind());
            v["violations"] = json!(violations);
            json_line(out, &v);
        }
        Format::Text => {
            let _ = writeln!(out, "{} {}\n{}\n{}", arr.kind(), rec.ti, rec.pj, rec.summary);
            let _ = writeln!(out, "melchior slack {}", exact::to_text(&rec.melchior_slack));
            let _ = writeln!(out, "combi_hirzebruch slack {}", opt_rational(&rec.combi_slack));
            let _ = writeln!(out, "hirzebruch slack {}", opt_rational(&rec.hirzebruch_slack));
            for (name, r) in &rec.checks {
                let status = match r {
                    None => "n/a",
                    Some(true) => "ok",
                    Some(false) if enumerator::FINDING_CHECKS.contains(name) => "finding",
                    Some(false) => "FAIL",
                };
                let _ = writeln!(out, "{name}: {status}");
            }
        }
        Format::Csv => {
            out.push_str("check,status\n");
            for (name, r) in &rec.checks {
                let status = r.map_or("n/a", |ok| if ok { "ok" } else { "fail" });
                let _ = writeln!(out, "{name},{status}");
            }
            let _ = writeln!(out, "melchior_slack,{}", exact::to_text(&rec.melchior_slack));
            let _ = writeln!(out, "combi_hirzebruch_slack,{}", opt_rational(&rec.combi_slack));
            let _ = writeln!(out, "hirzebruch_slack,{}", opt_rational(&rec.hirzebruch_slack));
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violation(violations.join(", ")))
    }
}

fn bounds_cmd(n: u32, m: u32, family: Option<Family>, mode: Mode, format: Format, out: &mut String) -> Result<(), CliError> {
    let families: Vec<Family> = family.map_or(Family::ALL.to_vec(), |f| vec![f]);
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    for fam in families {
        let cert = match bounds::lp_lower_bound(fam, n, m, mode) {
            Ok(c) => c,
            Err(BoundsError::NotApplicable(msg)) if family.is_none() => {
                rows.push(json!({"family": fam, "n": n, "m": m, "applicable": false, "reason": msg}));
                continue;
            }
            Err(e) => return Err(input(e)),
        };
        if let Err(e) = cert.verify() {
            bad.push(format!("{fam} certificate: {e}"));
        }
        let closed = bounds::closed_form_bound(fam, n, m).ok();
        let mut row = serde_json::to_value(&cert).expect("certificate serializes");
        row["applicable"] = json!(true);
        row["ceil_bound"] = json!(cert.integer_bound().to_string());
        row["closed_form"] = closed.as_ref().map_or(Value::Null, |c| exact::to_json(&c.value));
        row["closed_form_lines_only"] = json!(closed.as_ref().is_some_and(|c| c.lines_only));
        row["agrees"] = closed.as_ref().map_or(Value::Null, |c| json!(c.value == cert.bound));
        rows.push(row);
    }
    let classical = json!({
        "arnold": bounds::arnold_bounds(n, m).ok(),
        "arnold_ratio": bounds::arnold_ratio_bound(n, m).ok().map(|q| exact::to_json(&q)),
        "martinov": bounds::martinov_bound(n, m),
    });
    match format {
        Format::Json => json_line(out, &json!({"n": n, "m": m, "mode": mode, "certificates": rows, "classical": classical})),
        Format::Text => {
            for r in &rows {
                if r["applicable"] == json!(false) {
                    let _ = writeln!(out, "{}: not applicable ({})", r["family"].as_str().unwrap_or(""), r["reason"].as_str().unwrap_or(""));
                    continue;
                }
                let _ = writeln!(
                    out,
                    "{}: f >= {} (c1={}, c2={}, tight i={:?}, {}); closed form {}",
                    r["family"].as_str().unwrap_or(""),
                    text_of(&r["bound"]),
                    text_of(&r["c1"]),
                    text_of(&r["c2"]),
                    r["tight"].as_array().map(|a| a.iter().filter_map(Value::as_u64).collect::<Vec<_>>()).unwrap_or_default(),
                    mode,
                    text_of(&r["closed_form"]),
                );
            }
        }
        Format::Csv => {
            out.push_str("family,n,m,mode,c1,c2,bound,tight,closed_form\n");
            for r in rows.iter().filter(|r| r["applicable"] == json!(true)) {
                let tight: Vec<String> = r["tight"].as_array().into_iter().flatten().map(|v| v.to_string()).collect();
                let _ = writeln!(
                    out,
                    "{},{n},{m},{mode},{},{},{},{},{}",
                    r["family"].as_str().unwrap_or(""),
                    text_of(&r["c1"]),
                    text_of(&r["c2"]),
                    text_of(&r["bound"]),
                    tight.join(" "),
                    text_of(&r["closed_form"]),
                );
            }
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violation(bad.join("; ")))
    }
}

/// `[num, den]` JSON back to `num/den`.
fn text_of(v: &Value) -> String {
    match v.as_array().map(Vec::as_slice) {
        Some([num, den]) => {
            let s = |x: &Value| x.as_str().map(str::to_string).unwrap_or_else(|| x.to_string());
            if den == &json!(1) {
                s(num)
            } else {
                format!("{}/{}", s(num), s(den))
            }
        }
        _ => "n/a".into(),
    }
}

/// `10,12..16` style listing of a sorted set.
pub fn compress(values: &[u64]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < values.len() {
        let mut j = i;
        while j + 1 < values.len() && values[j + 1] == values[j] + 1 {
            j += 1;
        }
        parts.push(if j == i { values[i].to_string() } else { format!("{}..{}", values[i], values[j]) });
        i = j + 1;
    }
    parts.join(",")
}

fn spectrum_cmd(n: u32, format: Format, out: &mut String) -> Result<(), CliError> {
    let r = spectrum::spectrum_report(n).map_err(input)?;
    match format {
        Format::Text => {
            let lac: Vec<String> = r.lacunae.iter().map(|l| format!("({},{})", l.a, l.b)).collect();
            let _ = writeln!(out, "n={} achievable {{{}}}", r.n, compress(&r.achievable));
            let _ = writeln!(out, "lacunae {}", if lac.is_empty() { "none".into() } else { lac.join(" ") });
            let _ = writeln!(out, "d_n={} missing={}", r.d_n, r.missing_count);
        }
        _ => json_line(out, &serde_json::to_value(&r).expect("report serializes")),
    }
    if r.missing_count == r.missing_count_closed {
        Ok(())
    } else {
        Err(CliError::Violation("lacuna integer counts disagree".into()))
    }
}

fn enumerate_cmd(
    n: u32,
    verify: bool,
    nmax: Option<u32>,
    forbid: &[u32],
    ti: Option<&Path>,
    format: Format,
    out: &mut String,
) -> Result<(), CliError> {
    if verify {
        if !forbid.is_empty() || ti.is_some() {
            return Err(CliError::Input("--verify runs on the full corpus; filters are not allowed".into()));
        }
        let report = enumerator::verify_corpus_capped(n, nmax).map_err(input)?;
        match format {
            Format::Text => {
                let _ = writeln!(out, "n={} sequences={} signatures={}", n, report.sequences, report.signatures.len());
                let f: Vec<u64> = report.spectrum.iter().copied().collect();
                let _ = writeln!(out, "spectrum {{{}}}", compress(&f));
                for (name, t) in &report.checks {
                    let _ = writeln!(out, "{name}: {}/{} failed", t.failed, t.checked);
                }
                let _ = writeln!(out, "hirzebruch findings: {}", report.hirzebruch_findings.len());
            }
            _ => json_line(out, &serde_json::to_value(&report).expect("report serializes")),
        }
        let failed: Vec<String> = report
            .checks
            .iter()
            .filter(|(name, t)| t.failed > 0 && !enumerator::FINDING_CHECKS.contains(&name.as_str()))
            .map(|(name, t)| format!("{name} ({} cases)", t.failed))
            .chain(report.defects.iter().cloned())
            .collect();
        return if failed.is_empty() { Ok(()) } else { Err(CliError::Violation(failed.join(", "))) };
    }

    let ti = match ti {
        Some(p) => Some(TiProfile::from_json(&read_source(Some(p))?).map_err(input)?),
        None => None,
    };
    let options = EnumerationOptions {
        nontrivial_only: true,
        ti,
        forbidden: forbid.iter().copied().collect::<BTreeSet<_>>(),
        nmax,
    };
    let table = BoundTable::new(n);
    let mut failed = BTreeSet::new();
    for seq in WiringIter::new(n, options).map_err(input)? {
        let rec = enumerator::analyze(&seq, &table).map_err(CliError::Violation)?;
        failed.extend(rec.violations());
        match format {
            Format::Text => {
                let _ = writeln!(out, "{:?} {} {} {}", seq.moves().iter().map(|m| (m.pos, m.len)).collect::<Vec<_>>(), rec.ti, rec.pj, rec.summary);
            }
            _ => json_line(out, &serde_json::to_value(&rec).expect("record serializes")),
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violation(failed.into_iter().collect::<Vec<_>>().join(", ")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compress_ranges() {
        assert_eq!(compress(&[10, 12, 13, 14, 15, 16]), "10,12..16");
        assert_eq!(compress(&[]), "");
        assert_eq!(compress(&[1, 3, 5, 6]), "1,3,5..6");
    }

    #[test]
    fn text_of_rationals() {
        assert_eq!(text_of(&json!([2, 7])), "2/7");
        assert_eq!(text_of(&json!([28, 1])), "28");
        assert_eq!(text_of(&Value::Null), "n/a");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["arrlab", "bounds", "--n", "x"]), 2);
        assert_eq!(run(["arrlab", "nonsense"]), 2);
        assert_eq!(run(["arrlab", "spectrum", "--n", "2"]), 2);
    }
}
