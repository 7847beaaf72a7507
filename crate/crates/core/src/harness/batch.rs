//! Batch runner: checks a list of graphs in parallel and writes one row per
//! graph, in input order, as CSV or JSON.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::checks::{run_checks, CheckKind, CheckReport, Verdict};
use super::family::FamilySpec;
use crate::error::{Error, Result};
use crate::graph::{parse_graph6_lines, Graph};
use crate::immersion::CertificateDocument;

#[derive(Clone, Debug)]
pub enum BatchInput {
    Graph6File(PathBuf),
    Family(FamilySpec),
    Graphs(Vec<Graph>),
}

impl BatchInput {
    pub fn load(&self) -> Result<Vec<Graph>> {
        match self {
            BatchInput::Graph6File(path) => {
                let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
                parse_graph6_lines(&text)
            }
            BatchInput::Family(spec) => spec.generate(),
            BatchInput::Graphs(gs) => Ok(gs.clone()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::Input(format!("unknown format {s:?} (expected csv or json)"))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

#[derive(Clone, Debug)]
pub struct BatchConfig {
    pub input: BatchInput,
    pub checks: Vec<CheckKind>,
    pub workers: usize,
    /// Results file; `None` writes to stdout.
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    /// Where to dump certificates of failing rows. Defaults to
    /// `<out>.quarantine.json` when `out` is set.
    pub quarantine: Option<PathBuf>,
    /// Adds per-stage wall-clock timings. Output is then no longer
    /// reproducible byte for byte.
    pub timings: bool,
}

impl BatchConfig {
    pub fn new(input: BatchInput, checks: Vec<CheckKind>) -> Self {
        BatchConfig {
            input,
            checks,
            workers: 1,
            out: None,
            format: OutputFormat::Csv,
            quarantine: None,
            timings: false,
        }
    }

    fn quarantine_path(&self) -> Option<PathBuf> {
        self.quarantine.clone().or_else(|| {
            self.out.as_ref().map(|p| {
                let mut s = p.clone().into_os_string();
                s.push(".quarantine.json");
                PathBuf::from(s)
            })
        })
    }
}

#[derive(Debug)]
pub struct BatchSummary {
    pub reports: Vec<CheckReport>,
    pub failures: usize,
    pub quarantine: Option<PathBuf>,
}

impl BatchSummary {
    /// 0 when every applicable check holds, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.failures == 0 {
            0
        } else {
            1
        }
    }
}

#[derive(Serialize)]
struct QuarantineEntry<'a> {
    graph6: &'a str,
    failed: Vec<&'static str>,
    report: &'a CheckReport,
    certificates: Vec<QuarantineCert<'a>>,
}

#[derive(Serialize)]
struct QuarantineCert<'a> {
    source: &'a str,
    certificate: &'a CertificateDocument,
}

fn io_error(path: &Path, e: io::Error) -> Error {
    Error::Input(format!("{}: {e}", path.display()))
}

/// Checks every input graph and writes the results.
///
/// Rows come out in input order whatever the worker count. An `Err` means
/// bad input or configuration; failed checks are reported through
/// [`BatchSummary::failures`] and the quarantine file.
pub fn run_batch(cfg: &BatchConfig) -> Result<BatchSummary> {
    if cfg.workers == 0 {
        return Err(Error::Input("workers must be at least 1".into()));
    }
    if cfg.checks.is_empty() {
        return Err(Error::Input("no checks requested".into()));
    }
    let graphs = cfg.input.load()?;
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build().map_err(|e| Error::Internal(e.to_string()))?;
    let reports: Vec<CheckReport> =
        pool.install(|| graphs.par_iter().map(|g| run_checks(g, &cfg.checks, cfg.timings)).collect::<Result<_>>())?;

    let mut buf = Vec::new();
    match cfg.format {
        OutputFormat::Csv => write_csv(&mut buf, &reports, &cfg.checks, cfg.timings)?,
        OutputFormat::Json => write_json(&mut buf, &reports)?,
    }
    match &cfg.out {
        Some(path) => fs::write(path, &buf).map_err(|e| io_error(path, e))?,
        None => io::stdout().write_all(&buf).map_err(|e| Error::Input(format!("stdout: {e}")))?,
    }

    let failures = reports.iter().filter(|r| r.has_failure()).count();
    let mut quarantine = None;
    if failures > 0 {
        if let Some(path) = cfg.quarantine_path() {
            write_quarantine(&path, &reports)?;
            quarantine = Some(path);
        }
    }
    Ok(BatchSummary { reports, failures, quarantine })
}

/// Writes every row with a failed check, with its certificates, as JSON.
pub fn write_quarantine(path: &Path, reports: &[CheckReport]) -> Result<()> {
    let entries: Vec<QuarantineEntry> = reports
        .iter()
        .filter(|r| r.has_failure())
        .map(|r| QuarantineEntry {
            graph6: &r.graph6,
            failed: r.bounds.iter().filter(|(_, b)| b.holds == Verdict::Fails).map(|(k, _)| k.name()).collect(),
            report: r,
            certificates: r
                .certificates
                .iter()
                .map(|(source, certificate)| QuarantineCert { source, certificate })
                .collect(),
        })
        .collect();
    let text = serde_json::to_string_pretty(&entries).map_err(|e| Error::Internal(e.to_string()))?;
    fs::write(path, text + "\n").map_err(|e| io_error(path, e))
}

fn opt(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Column order: `graph6, n, alpha, chi, t_max_plain, t_max_strong_odd`, a
/// `<check>_bound, <check>_holds` pair per check in request order, then
/// `t_appendix` if the appendix check was requested.
pub fn csv_header(checks: &[CheckKind], timings: bool) -> Vec<String> {
    let mut h: Vec<String> =
        ["graph6", "n", "alpha", "chi", "t_max_plain", "t_max_strong_odd"].map(String::from).to_vec();
    for c in checks {
        h.push(format!("{c}_bound"));
        h.push(format!("{c}_holds"));
    }
    if checks.contains(&CheckKind::Appendix) {
        h.push("t_appendix".into());
    }
    if timings {
        h.push("runtime_ms".into());
    }
    h
}

fn csv_row(r: &CheckReport, checks: &[CheckKind], timings: bool) -> Vec<String> {
    let mut row = vec![
        r.graph6.clone(),
        r.n.to_string(),
        r.alpha.to_string(),
        opt(r.chi),
        opt(r.t_max_plain),
        opt(r.t_max_strong_odd),
    ];
    for (_, b) in &r.bounds {
        row.push(opt(b.bound_value));
        row.push(b.holds.as_str().to_string());
    }
    if checks.contains(&CheckKind::Appendix) {
        row.push(opt(r.t_appendix));
    }
    if timings {
        let total: f64 = r.runtime_ms.iter().flat_map(|m| m.values()).sum();
        row.push(format!("{total:.3}"));
    }
    row
}

fn write_csv(out: &mut Vec<u8>, reports: &[CheckReport], checks: &[CheckKind], timings: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| Error::Internal(e.to_string());
    w.write_record(csv_header(checks, timings)).map_err(csv_err)?;
    for r in reports {
        w.write_record(csv_row(r, checks, timings)).map_err(csv_err)?;
    }
    w.flush().map_err(|e| Error::Internal(e.to_string()))
}

fn write_json(out: &mut Vec<u8>, reports: &[CheckReport]) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, reports).map_err(|e| Error::Internal(e.to_string()))?;
    out.push(b'\n');
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(spec: &str, workers: usize, out: PathBuf) -> BatchConfig {
        let mut c = BatchConfig::new(
            BatchInput::Family(spec.parse().unwrap()),
            vec![CheckKind::Main, CheckKind::Appendix, CheckKind::Vergara],
        );
        c.workers = workers;
        c.out = Some(out);
        c
    }

    #[test]
    fn csv_is_ordered_and_reproducible() {
        let dir = tempfile::tempdir().unwrap();
        let a = dir.path().join("a.csv");
        let b = dir.path().join("b.csv");
        let s = run_batch(&cfg("alpha2:n=5", 1, a.clone())).unwrap();
        assert_eq!(s.exit_code(), 0);
        run_batch(&cfg("alpha2:n=5", 3, b.clone())).unwrap();
        let text = fs::read_to_string(&a).unwrap();
        assert_eq!(text, fs::read_to_string(&b).unwrap());
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "graph6,n,alpha,chi,t_max_plain,t_max_strong_odd,main_bound,main_holds,appendix_bound,appendix_holds,\
             vergara_bound,vergara_holds,t_appendix"
        );
        assert_eq!(lines.count(), 14);
        assert!(!dir.path().join("a.csv.quarantine.json").exists());
    }

    #[test]
    fn json_rows_and_not_applicable() {
        let dir = tempfile::tempdir().unwrap();
        let out = dir.path().join("r.json");
        let mut c = BatchConfig::new(
            BatchInput::Graphs(vec![Graph::cycle(5).unwrap(), Graph::empty(3).unwrap()]),
            vec![CheckKind::Main, CheckKind::Alpha3],
        );
        c.out = Some(out.clone());
        c.format = OutputFormat::Json;
        let s = run_batch(&c).unwrap();
        assert_eq!(s.exit_code(), 0);
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
        assert_eq!(v[0]["graph6"], "Dhc");
        assert_eq!(v[0]["bounds"]["main"]["bound_value"], 5);
        assert_eq!(v[0]["bounds"]["alpha3"]["holds"], "n/a");
        assert_eq!(v[1]["bounds"]["alpha3"]["holds"], "out-of-regime");
        assert!(v[0].get("runtime_ms").is_none());
    }

    #[test]
    fn quarantine_keeps_failing_rows_only() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("q.json");
        let checks = [CheckKind::Main];
        let ok = run_checks(&Graph::cycle(5).unwrap(), &checks, false).unwrap();
        let mut bad = ok.clone();
        bad.bounds[0].1.holds = Verdict::Fails;
        write_quarantine(&path, &[ok, bad]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 1);
        assert_eq!(v[0]["failed"], serde_json::json!(["main"]));
        assert_eq!(v[0]["certificates"][0]["source"], "t_max_strong_odd");
        assert_eq!(v[0]["certificates"][0]["certificate"]["t"], 3);
    }

    #[test]
    fn bad_input_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("in.g6");
        fs::write(&path, "Bw\n!!\n").unwrap();
        let c = BatchConfig::new(BatchInput::Graph6File(path), vec![CheckKind::Main]);
        let err = run_batch(&c).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let mut c = BatchConfig::new(BatchInput::Graphs(vec![]), vec![CheckKind::Main]);
        c.workers = 0;
        assert!(run_batch(&c).is_err());
    }
}
