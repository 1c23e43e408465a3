use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::time::Duration;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::odd_primes_in;

/// Integer parameters of a check, ordered by key.
pub type Params = BTreeMap<String, i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Congruences,
    Conjectures,
    Bigprime,
}

impl Suite {
    pub const ALL: [Suite; 4] = [
        Suite::Identities,
        Suite::Congruences,
        Suite::Conjectures,
        Suite::Bigprime,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Congruences => "congruences",
            Suite::Conjectures => "conjectures",
            Suite::Bigprime => "bigprime",
        }
    }

    /// Conjecture suites report findings; failures elsewhere are defects.
    pub fn is_conjectural(self) -> bool {
        self == Suite::Conjectures
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    Evidence,
    Inconclusive,
}

impl Status {
    pub const ALL: [Status; 5] = [
        Status::Pass,
        Status::Fail,
        Status::Skip,
        Status::Evidence,
        Status::Inconclusive,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
            Status::Evidence => "evidence",
            Status::Inconclusive => "inconclusive",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one identity, congruence or conjecture check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub id: String,
    pub params: Params,
    pub status: Status,
    pub witness: String,
    #[serde(rename = "elapsed_ms", serialize_with = "serialize_millis")]
    pub elapsed: Duration,
}

fn serialize_millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(millis(*d))
}

/// Milliseconds rounded to microseconds.
pub fn millis(d: Duration) -> f64 {
    d.as_micros() as f64 / 1000.0
}

pub const WITNESS_LIMIT: usize = 240;

/// Shortens long renderings, keeping head and tail.
pub fn clip(s: &str) -> String {
    let chars: Vec<char> = s.chars().collect();
    if chars.len() <= WITNESS_LIMIT {
        return s.to_string();
    }
    let head: String = chars[..WITNESS_LIMIT / 2].iter().collect();
    let tail: String = chars[chars.len() - WITNESS_LIMIT / 4..].iter().collect();
    format!("{head} … {tail} [{} chars]", chars.len())
}

impl CheckResult {
    pub fn new(suite: Suite, id: impl Into<String>, params: Params, status: Status) -> Self {
        Self {
            suite,
            id: id.into(),
            params,
            status,
            witness: String::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = clip(&witness.into());
        self
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }

    /// Ordering used by reports: suite, id, then parameters numerically.
    pub fn report_order(&self, other: &Self) -> Ordering {
        self.suite
            .cmp(&other.suite)
            .then_with(|| self.id.cmp(&other.id))
            .then_with(|| self.params.iter().cmp(other.params.iter()))
    }

    /// `k1=v1;k2=v2`, sorted by key.
    pub fn params_string(&self) -> String {
        render_params(&self.params)
    }
}

pub fn render_params(params: &Params) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn params_of(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

pub(crate) fn param(id: &str, params: &Params, key: &str) -> Result<i64> {
    params.get(key).copied().ok_or_else(|| Error::MissingParam {
        id: id.to_string(),
        param: key.to_string(),
    })
}

pub(crate) fn param_at_least(id: &str, params: &Params, key: &str, min: i64) -> Result<i64> {
    let v = param(id, params, key)?;
    if v < min {
        return Err(Error::PredicateViolated {
            id: id.to_string(),
            reason: format!("{key} = {v} must be at least {min}"),
        });
    }
    Ok(v)
}

/// Parameter ranges for catalog scans; all ranges are inclusive.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CellBounds {
    /// Upper bound on each entry's main index (`n`, `k`, `m` or `N`).
    pub n_max: Option<i64>,
    pub primes: Option<(u64, u64)>,
    pub grids: BTreeMap<String, (i64, i64)>,
}

impl CellBounds {
    /// `key`'s grid override, else `lo..=hi`.
    pub fn range(&self, key: &str, lo: i64, hi: i64) -> RangeInclusive<i64> {
        match self.grids.get(key) {
            Some(&(a, b)) => a..=b,
            None => lo..=hi,
        }
    }

    /// Like [`range`](Self::range), additionally capped by `n_max`.
    pub fn index_range(&self, key: &str, lo: i64, hi: i64) -> RangeInclusive<i64> {
        let r = self.range(key, lo, hi);
        match self.n_max {
            Some(cap) => *r.start()..=(*r.end()).min(cap),
            None => r,
        }
    }

    /// Odd primes in the configured range, else in `lo..=hi`.
    pub fn odd_primes(&self, lo: u64, hi: u64) -> Vec<u64> {
        let (a, b) = self.primes.unwrap_or((lo, hi));
        odd_primes_in(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clipping_keeps_short_strings() {
        assert_eq!(clip("abc"), "abc");
        let long = "x".repeat(1000);
        let c = clip(&long);
        assert!(c.len() < 300);
        assert!(c.ends_with("[1000 chars]"));
    }

    #[test]
    fn params_render_sorted() {
        let p = params_of(&[("x", -3), ("b", 2)]);
        assert_eq!(render_params(&p), "b=2;x=-3");
    }

    #[test]
    fn report_order_is_numeric_in_params() {
        let a = CheckResult::new(Suite::Identities, "EQ_1_7", params_of(&[("n", 2)]), Status::Pass);
        let b = CheckResult::new(Suite::Identities, "EQ_1_7", params_of(&[("n", 10)]), Status::Pass);
        assert_eq!(a.report_order(&b), Ordering::Less);
    }

    #[test]
    fn suite_parsing() {
        assert_eq!("bigprime".parse::<Suite>().unwrap(), Suite::Bigprime);
        assert!("nonsense".parse::<Suite>().is_err());
    }
}
