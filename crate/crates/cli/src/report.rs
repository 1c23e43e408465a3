//! Report type and its json, csv and text renderings.

use std::io::Write;
use std::path::Path;

use delannoy_core::{CheckResult, Status};
use serde::Serialize;

use crate::config::{Format, RunConfig};
use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub evidence: usize,
    pub inconclusive: usize,
    /// Failures of proved statements.
    pub proved_failures: usize,
    /// Failures of conjectured statements.
    pub conjecture_failures: usize,
}

impl Summary {
    pub fn of(results: &[CheckResult]) -> Self {
        let mut s = Summary {
            total: results.len(),
            ..Summary::default()
        };
        for r in results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => {
                    s.fail += 1;
                    if r.suite.is_conjectural() {
                        s.conjecture_failures += 1;
                    } else {
                        s.proved_failures += 1;
                    }
                }
                Status::Skip => s.skip += 1,
                Status::Evidence => s.evidence += 1,
                Status::Inconclusive => s.inconclusive += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool_version: String,
    pub config: RunConfig,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
    pub elapsed_ms: f64,
}

impl Report {
    pub fn new(config: RunConfig, results: Vec<CheckResult>, elapsed_ms: f64) -> Self {
        let summary = Summary::of(&results);
        Report {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            results,
            summary,
            elapsed_ms,
        }
    }

    /// 0 unless a proved statement failed, or a conjecture failed under
    /// `strict_conjectures`.
    pub fn exit_code(&self) -> i32 {
        let s = &self.summary;
        if s.proved_failures > 0 || (self.config.strict_conjectures && s.conjecture_failures > 0) {
            1
        } else {
            0
        }
    }
}

pub fn render_json(r: &Report) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("report serializes");
    s.push('\n');
    s
}

pub fn render_csv(r: &Report) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["suite", "id", "params", "status", "witness", "elapsed_ms"])
        .expect("in-memory write");
    for c in &r.results {
        w.write_record([
            c.suite.as_str(),
            &c.id,
            &c.params_string(),
            c.status.as_str(),
            &c.witness,
            &delannoy_core::check::millis(c.elapsed).to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

pub fn render_text(r: &Report) -> String {
    let mut out = String::new();
    let id_width = r.results.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
    let param_width = r
        .results
        .iter()
        .map(|c| c.params_string().len())
        .max()
        .unwrap_or(6)
        .clamp(6, 40);
    let mut suite = None;
    for c in &r.results {
        if suite != Some(c.suite) {
            suite = Some(c.suite);
            let label = if c.suite.is_conjectural() { " (conjectural, non-breaking)" } else { "" };
            out.push_str(&format!("== {}{label} ==\n", c.suite));
        }
        let mut line = format!(
            "{:<12} {:<id_width$} {:<param_width$}",
            c.status.as_str(),
            c.id,
            c.params_string()
        );
        if c.status != Status::Pass {
            line.push_str("  ");
            line.push_str(&c.witness);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    let s = &r.summary;
    out.push_str(&format!(
        "total {}: pass {}, fail {}, skip {}, evidence {}, inconclusive {}; proved failures {}, conjecture failures {}\n",
        s.total, s.pass, s.fail, s.skip, s.evidence, s.inconclusive, s.proved_failures, s.conjecture_failures
    ));
    if r.config.timings {
        out.push_str(&format!("elapsed {:.1} ms\n", r.elapsed_ms));
    }
    out
}

pub fn render(r: &Report, format: Format) -> String {
    match format {
        Format::Text => render_text(r),
        Format::Json => render_json(r),
        Format::Csv => render_csv(r),
    }
}

/// Writes the report to `path`, or to standard output.
pub fn emit_report(r: &Report, format: Format, path: Option<&Path>) -> Result<(), CliError> {
    let body = render(r, format);
    let io = |e: std::io::Error, what: &str| CliError::Io(format!("{what}: {e}"));
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| io(e, &p.display().to_string())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| io(e, "stdout"))
        }
    }
}
