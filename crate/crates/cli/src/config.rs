//! Command-line parsing and the validated run configuration.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use delannoy_core::check::CellBounds;
use delannoy_core::exact::is_prime;
use delannoy_core::Suite;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::catalog::Catalog;
use crate::CliError;

/// The prime of the large-prime remark, used when no prime range is given.
pub const REMARK_PRIME: u64 = 588811;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Csv => "csv",
        })
    }
}

/// An inclusive integer range written `lo..hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected LO..HI, got `{s}`"))?;
        let b = b.strip_prefix('=').unwrap_or(b);
        let lo = a.trim().parse().map_err(|_| format!("bad lower bound in `{s}`"))?;
        let hi = b.trim().parse().map_err(|_| format!("bad upper bound in `{s}`"))?;
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(Span { lo, hi })
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl Serialize for Span {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Span {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `key=lo..hi`.
fn parse_grid(s: &str) -> Result<(String, Span), String> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| format!("expected KEY=LO..HI, got `{s}`"))?;
    if k.is_empty() {
        return Err(format!("missing grid key in `{s}`"));
    }
    Ok((k.to_string(), v.parse()?))
}

/// Settings of one `verify` run. `jobs` and `out` do not affect results and
/// are left out of the report echo.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub suites: Vec<Suite>,
    pub ids: Vec<String>,
    pub n_max: Option<i64>,
    pub primes: Option<Span>,
    pub grids: BTreeMap<String, Span>,
    #[serde(skip_serializing)]
    pub jobs: Option<usize>,
    pub format: Format,
    #[serde(skip_serializing)]
    pub out: Option<PathBuf>,
    pub strict_conjectures: bool,
    pub timings: bool,
}

impl RunConfig {
    /// Suites to run; all but `bigprime` when none were named.
    pub fn effective_suites(&self) -> Vec<Suite> {
        if self.suites.is_empty() {
            vec![Suite::Identities, Suite::Congruences, Suite::Conjectures]
        } else {
            let mut s = self.suites.clone();
            s.sort();
            s.dedup();
            s
        }
    }

    pub fn bounds(&self) -> CellBounds {
        CellBounds {
            n_max: self.n_max,
            primes: self.primes.map(|s| (s.lo.max(0) as u64, s.hi.max(0) as u64)),
            grids: self.grids.iter().map(|(k, s)| (k.clone(), (s.lo, s.hi))).collect(),
        }
    }

    pub fn validate(&self, catalog: &Catalog) -> Result<(), CliError> {
        if let Some(n) = self.n_max {
            if n < 0 {
                return Err(CliError::Usage(format!("--n-max must be non-negative, got {n}")));
            }
        }
        if let Some(p) = self.primes {
            if p.lo > p.hi || p.hi < 0 {
                return Err(CliError::Usage(format!("empty prime range {p}")));
            }
        }
        for (k, s) in &self.grids {
            if s.lo > s.hi {
                return Err(CliError::Usage(format!("empty grid range {k}={s}")));
            }
        }
        if self.jobs == Some(0) {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        let suites = self.effective_suites();
        for id in &self.ids {
            match catalog.find(id) {
                None => return Err(CliError::Usage(format!("unknown id `{id}`"))),
                Some(e) if !suites.contains(&e.suite) => {
                    return Err(CliError::Usage(format!(
                        "id `{id}` belongs to suite `{}`, which is not selected",
                        e.suite
                    )))
                }
                Some(_) => {}
            }
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(name = "delannoy", version, about = "Exact checks of Delannoy/Schröder identities and congruences")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run identity, congruence, conjecture or large-prime checks.
    Verify(VerifyArgs),
    /// Check q_p(2) ≡ 1/3 (mod p) and W_p(y) ≡ 0 (mod p^2) at one prime.
    Bigprime(BigprimeArgs),
    /// Print the check catalogs.
    List,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// JSON file with the same field names as the flags; flags win.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Suites to run (identities, congruences, conjectures, bigprime).
    #[arg(long, value_delimiter = ',')]
    suite: Vec<String>,
    /// Restrict to these ids.
    #[arg(long, value_delimiter = ',')]
    ids: Vec<String>,
    #[arg(long)]
    n_max: Option<i64>,
    /// Inclusive prime range LO..HI.
    #[arg(long)]
    primes: Option<Span>,
    /// Grid override KEY=LO..HI; repeatable.
    #[arg(long, value_parser = parse_grid)]
    grid: Vec<(String, Span)>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Make conjecture failures affect the exit code.
    #[arg(long)]
    strict_conjectures: bool,
    /// Record per-check and total wall times.
    #[arg(long)]
    timings: bool,
}

#[derive(Debug, Args)]
struct BigprimeArgs {
    #[arg(long, default_value_t = REMARK_PRIME)]
    p: u64,
    #[arg(long, default_value_t = 2)]
    y: i64,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    timings: bool,
}

/// A parsed command line.
#[derive(Debug, Clone, PartialEq)]
pub enum Invocation {
    Run(RunConfig),
    List,
    /// Help or version text requested.
    Info(String),
}

/// Parses `argv` (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<Invocation, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Ok(Invocation::Info(e.to_string())),
                _ => Err(CliError::Usage(e.to_string())),
            };
        }
    };
    match cli.command {
        Command::List => Ok(Invocation::List),
        Command::Bigprime(a) => {
            if a.p % 2 == 0 || !is_prime(a.p) || a.p > i64::MAX as u64 {
                return Err(CliError::Usage(format!("--p must be an odd prime, got {}", a.p)));
            }
            let p = a.p as i64;
            let mut grids = BTreeMap::new();
            grids.insert("y".to_string(), Span { lo: a.y, hi: a.y });
            Ok(Invocation::Run(RunConfig {
                suites: vec![Suite::Bigprime],
                primes: Some(Span { lo: p, hi: p }),
                grids,
                format: a.format.unwrap_or_default(),
                out: a.out,
                timings: a.timings,
                ..RunConfig::default()
            }))
        }
        Command::Verify(a) => {
            let mut cfg = match &a.config {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                    serde_json::from_str(&text)
                        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
                }
                None => RunConfig::default(),
            };
            if !a.suite.is_empty() {
                cfg.suites = a
                    .suite
                    .iter()
                    .map(|s| s.parse::<Suite>().map_err(CliError::Usage))
                    .collect::<Result<_, _>>()?;
            }
            if !a.ids.is_empty() {
                cfg.ids = a.ids;
            }
            if a.n_max.is_some() {
                cfg.n_max = a.n_max;
            }
            if a.primes.is_some() {
                cfg.primes = a.primes;
            }
            cfg.grids.extend(a.grid);
            if a.jobs.is_some() {
                cfg.jobs = a.jobs;
            }
            if let Some(f) = a.format {
                cfg.format = f;
            }
            if a.out.is_some() {
                cfg.out = a.out;
            }
            cfg.strict_conjectures |= a.strict_conjectures;
            cfg.timings |= a.timings;
            Ok(Invocation::Run(cfg))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> RunConfig {
        let mut argv = vec!["delannoy"];
        argv.extend_from_slice(args);
        match parse_args(argv).unwrap() {
            Invocation::Run(c) => c,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn verify_flags() {
        let c = run(&["verify", "--suite", "identities", "--ids", "EQ_1_7", "--n-max", "50"]);
        assert_eq!(c.suites, vec![Suite::Identities]);
        assert_eq!(c.ids, vec!["EQ_1_7"]);
        assert_eq!(c.n_max, Some(50));
        let c = run(&["verify", "--primes", "3..11", "--grid", "x=-2..2", "--grid", "b=0..1", "--format", "csv"]);
        assert_eq!(c.primes, Some(Span { lo: 3, hi: 11 }));
        assert_eq!(c.grids["x"], Span { lo: -2, hi: 2 });
        assert_eq!(c.grids.len(), 2);
        assert_eq!(c.format, Format::Csv);
    }

    #[test]
    fn bigprime_flags() {
        let c = run(&["bigprime", "--p", "588811"]);
        assert_eq!(c.suites, vec![Suite::Bigprime]);
        assert_eq!(c.primes, Some(Span { lo: 588811, hi: 588811 }));
        assert_eq!(c.grids["y"], Span { lo: 2, hi: 2 });
        assert!(matches!(parse_args(["delannoy", "bigprime", "--p", "9"]), Err(CliError::Usage(_))));
    }

    #[test]
    fn usage_errors() {
        for bad in [
            vec!["delannoy", "verify", "--suite", "nonsense"],
            vec!["delannoy", "verify", "--primes", "7..3"],
            vec!["delannoy", "verify", "--grid", "x"],
            vec!["delannoy", "frobnicate"],
        ] {
            assert!(matches!(parse_args(bad.clone()), Err(CliError::Usage(_))), "{bad:?}");
        }
        assert!(matches!(parse_args(["delannoy", "--help"]), Ok(Invocation::Info(_))));
    }

    #[test]
    fn span_round_trip() {
        let s: Span = "-3..4".parse().unwrap();
        assert_eq!(s.to_string(), "-3..4");
        assert_eq!("1..=5".parse::<Span>().unwrap(), Span { lo: 1, hi: 5 });
        assert!("5".parse::<Span>().is_err());
    }

    #[test]
    fn config_file_and_flag_precedence() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cfg.json");
        std::fs::write(&path, r#"{"suites":["congruences"],"n_max":7,"primes":"3..13","timings":true}"#).unwrap();
        let c = run(&["verify", "--config", path.to_str().unwrap(), "--n-max", "9"]);
        assert_eq!(c.suites, vec![Suite::Congruences]);
        assert_eq!(c.n_max, Some(9));
        assert_eq!(c.primes, Some(Span { lo: 3, hi: 13 }));
        assert!(c.timings);
        std::fs::write(&path, r#"{"bogus":1}"#).unwrap();
        let argv = ["delannoy", "verify", "--config", path.to_str().unwrap()];
        assert!(matches!(parse_args(argv), Err(CliError::Usage(_))));
    }
}
