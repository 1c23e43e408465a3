//! Command-line front end: parses a run configuration, fans the selected
//! check cells out over a worker pool and emits a deterministic report.

pub mod catalog;
pub mod config;
pub mod report;

use std::time::{Duration, Instant};

use delannoy_core::{CheckResult, Params, Status};
use rayon::prelude::*;

pub use catalog::{Catalog, Entry, Evaluator};
pub use config::{parse_args, Format, Invocation, RunConfig, Span};
pub use report::{emit_report, render, Report, Summary};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

fn evaluate(entry: &Entry, params: &Params, timings: bool) -> CheckResult {
    let started = Instant::now();
    let mut r = (entry.eval)(params).unwrap_or_else(|e| {
        CheckResult::new(entry.suite, entry.id.clone(), params.clone(), Status::Fail)
            .with_witness(format!("error: {e}"))
    });
    r.elapsed = if timings { started.elapsed() } else { Duration::ZERO };
    r
}

/// Runs every selected cell on at most `cfg.jobs` workers.
pub fn run_suite(cfg: &RunConfig, catalog: &Catalog) -> Result<Report, CliError> {
    cfg.validate(catalog)?;
    let started = Instant::now();
    let bounds = cfg.bounds();
    let cells: Vec<(&Entry, Params)> = catalog
        .select(&cfg.effective_suites(), &cfg.ids)
        .into_iter()
        .flat_map(|e| (e.cells)(&bounds).into_iter().map(move |p| (e, p)))
        .collect();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cfg.jobs {
        pool = pool.num_threads(j);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let mut results: Vec<CheckResult> = pool.install(|| {
        cells
            .par_iter()
            .map(|(e, p)| evaluate(e, p, cfg.timings))
            .collect()
    });
    results.sort_by(|a, b| a.report_order(b));
    let elapsed = if cfg.timings {
        delannoy_core::check::millis(started.elapsed())
    } else {
        0.0
    };
    Ok(Report::new(cfg.clone(), results, elapsed))
}

fn render_list(catalog: &Catalog) -> String {
    let bounds = delannoy_core::check::CellBounds::default();
    let width = catalog.entries().iter().map(|e| e.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    let mut suite = None;
    for e in catalog.entries() {
        if suite != Some(e.suite) {
            suite = Some(e.suite);
            out.push_str(&format!("== {} ==\n", e.suite));
        }
        let cells = if e.suite == delannoy_core::Suite::Bigprime {
            "1 cell".to_string()
        } else {
            format!("{} cells", (e.cells)(&bounds).len())
        };
        out.push_str(&format!("{:<width$}  {:<10}  {}\n", e.id, cells, e.reference));
    }
    out
}

/// Runs the command line `argv` against `catalog`; returns the exit code.
pub fn main_with_catalog<I, T>(argv: I, catalog: &Catalog) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let outcome = parse_args(argv).and_then(|inv| match inv {
        Invocation::Info(text) => {
            print!("{text}");
            Ok(0)
        }
        Invocation::List => {
            print!("{}", render_list(catalog));
            Ok(0)
        }
        Invocation::Run(cfg) => {
            let report = run_suite(&cfg, catalog)?;
            emit_report(&report, cfg.format, cfg.out.as_deref())?;
            Ok(report.exit_code())
        }
    });
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("delannoy: {}", e.to_string().trim_end());
            e.exit_code()
        }
    }
}

pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    main_with_catalog(argv, &Catalog::standard())
}
