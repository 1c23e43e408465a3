//! Evidence for the open statements: irreducibility of `w_n` and `W_n`,
//! integrality and congruences of `f_n`, and the conjectural congruences
//! for `T_k` and `M_k`.
//!
//! Irreducibility is only ever evidenced (status `evidence` or
//! `inconclusive`); every other check reports pass or fail of the
//! conjectured statement under [`Suite::Conjectures`].

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::check::{param, param_at_least, params_of, CellBounds, CheckResult, Params, Status, Suite};
use crate::error::{Error, Result};
use crate::exact::{
    binomial, euler_number, fermat_quotient, is_prime, legendre_symbol, odd_primes_in, padic_valuation,
    prime_power, rational_mod, Rational,
};
use crate::poly::{fp_irreducible, FpPolynomial, IntPolynomial, RatPolynomial};
use crate::sequences::{
    big_w_poly, cache, delannoy_values, motzkin_values, r_poly_alt, small_w_poly, trinomial_values,
};

macro_rules! conjecture_ids {
    ($($variant:ident => $name:literal, $reference:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum ConjectureId {
            $($variant,)*
        }

        impl ConjectureId {
            pub const ALL: &'static [ConjectureId] = &[$(ConjectureId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(ConjectureId::$variant => $name,)*
                }
            }

            pub fn reference(self) -> &'static str {
                match self {
                    $(ConjectureId::$variant => $reference,)*
                }
            }
        }
    };
}

conjecture_ids! {
    Conj410 => "CONJ_4_10", "Conjecture 4.2(ii), Eq. (4.10)";
    Conj411 => "CONJ_4_11", "Conjecture 4.2(ii), Eq. (4.11)";
    Conj41BigW => "CONJ_4_1_BIGW", "Conjecture 4.1, W_n(x)";
    Conj41WEven => "CONJ_4_1_WEVEN", "Conjecture 4.1, w_{2n}(x)/(2x+1)";
    Conj41WOdd => "CONJ_4_1_WODD", "Conjecture 4.1, w_{2n-1}(x)";
    Conj42Int => "CONJ_4_2_INT", "Conjecture 4.2(i), integrality";
    Conj42Mod32 => "CONJ_4_2_MOD32", "Conjecture 4.2(i), f_n(1) mod 32";
    Conj42Poly => "CONJ_4_2_POLY", "Conjecture 4.2(ii), x^(p-1)/2";
    Conj49 => "CONJ_4_9", "Conjecture 4.2(ii), Eq. (4.9)";
    R31Kmsq => "R31_KMSQ", "Remark 3.1";
    R31Ktm => "R31_KTM", "Remark 3.1";
    R31Msq => "R31_MSQ", "Remark 3.1";
    R31Tm => "R31_TM", "Remark 3.1";
    S14aC56 => "S14A_C56", "Remark 3.1, [S14a, Conj. 5.6]";
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConjectureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ConjectureId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Primes tried, in order, when looking for an irreducible reduction.
pub const DEFAULT_IRREDUCIBILITY_PRIMES: (u64, u64) = (3, 199);

impl ConjectureId {
    fn is_irreducibility(self) -> bool {
        matches!(self, Self::Conj41BigW | Self::Conj41WEven | Self::Conj41WOdd)
    }

    fn is_remark31(self) -> bool {
        matches!(self, Self::R31Kmsq | Self::R31Ktm | Self::R31Msq | Self::R31Tm | Self::S14aC56)
    }
}

/// Parameter cells of a default scan.
pub fn conjecture_cells(id: ConjectureId, b: &CellBounds) -> Vec<Params> {
    use ConjectureId::*;
    let one = |key: &str, range: std::ops::RangeInclusive<i64>| -> Vec<Params> {
        range.map(|v| params_of(&[(key, v)])).collect()
    };
    match id {
        Conj41BigW | Conj41WEven | Conj41WOdd => one("n", b.index_range("n", 2, 40)),
        Conj42Int | Conj42Mod32 => one("n", b.index_range("n", 1, 100)),
        Conj49 | Conj410 | Conj411 | Conj42Poly => b
            .odd_primes(3, 59)
            .into_iter()
            .map(|p| params_of(&[("p", p as i64)]))
            .collect(),
        _ => b
            .odd_primes(5, 59)
            .into_iter()
            .filter(|&p| p > 3)
            .map(|p| params_of(&[("p", p as i64)]))
            .collect(),
    }
}

fn ri(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn frac(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Rational {
    Rational::new(a.into(), b.into())
}

fn leg(a: i64, p: u64) -> i64 {
    legendre_symbol(&BigInt::from(a), p).expect("p is an odd prime") as i64
}

fn residue_text(q: &Rational, p: u64, k: u32) -> String {
    let mod_text = if k == 1 { format!("{p}") } else { format!("{p}^{k}") };
    match rational_mod(q, &prime_power(p, k)) {
        Some(r) => format!("{q} ≡ {r} (mod {mod_text})"),
        None => format!("{q} (not {p}-integral)"),
    }
}

fn congruence(
    id: ConjectureId,
    params: Params,
    lhs: &Rational,
    rhs: &Rational,
    p: u64,
    k: u32,
    started: Instant,
) -> CheckResult {
    let v = padic_valuation(&(lhs - rhs), p);
    let ok = v.is_none_or(|v| v >= k as i64);
    let val = match v {
        None => "difference is 0".to_string(),
        Some(v) => format!("ord_{p}(lhs - rhs) = {v}"),
    };
    CheckResult::new(Suite::Conjectures, id.as_str(), params, Status::from_bool(ok))
        .with_witness(format!(
            "lhs = {}; rhs = {}; {val}",
            residue_text(lhs, p, k),
            residue_text(rhs, p, k)
        ))
        .with_elapsed(started.elapsed())
}

/// The polynomial an irreducibility id refers to at index `n`.
pub fn conj41_polynomial(id: ConjectureId, n: u64) -> Result<IntPolynomial> {
    match id {
        ConjectureId::Conj41WOdd => Ok(small_w_poly(2 * n - 1)),
        ConjectureId::Conj41WEven => small_w_poly(2 * n).exact_div(&IntPolynomial::linear(2, 1)),
        ConjectureId::Conj41BigW => Ok(big_w_poly(n)),
        other => Err(Error::UnknownId(other.as_str().into())),
    }
}

/// First prime of `primes` modulo which `f` is irreducible, skipping primes
/// that divide the leading coefficient.
pub fn irreducibility_witness(f: &IntPolynomial, primes: &[u64]) -> Result<Option<u64>> {
    let lead = f.leading().cloned().unwrap_or_default();
    for &p in primes {
        if (&lead % BigInt::from(p)).is_zero() {
            continue;
        }
        if fp_irreducible(&FpPolynomial::from_int(f, p)?)? {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

fn conj41_one(id: ConjectureId, n: u64, primes: &[u64]) -> Result<CheckResult> {
    let started = Instant::now();
    let f = conj41_polynomial(id, n)?;
    let deg = f.degree().unwrap_or(0);
    let params = params_of(&[("n", n as i64)]);
    let (status, witness) = match irreducibility_witness(&f, primes)? {
        Some(p) => (Status::Evidence, format!("degree {deg}; irreducible mod {p}")),
        None => (
            Status::Inconclusive,
            format!("degree {deg}; reducible mod every listed prime not dividing the leading coefficient"),
        ),
    };
    Ok(CheckResult::new(Suite::Conjectures, id.as_str(), params, status)
        .with_witness(witness)
        .with_elapsed(started.elapsed()))
}

/// Irreducibility evidence for `w_{2n-1}(x)`, `w_{2n}(x)/(2x+1)` and `W_n(x)`.
pub fn conj41_evidence(n: u64, primes: &[u64]) -> Result<Vec<CheckResult>> {
    if n < 2 {
        return Err(Error::PredicateViolated {
            id: "CONJ_4_1".into(),
            reason: format!("n = {n} must be at least 2"),
        });
    }
    [ConjectureId::Conj41WOdd, ConjectureId::Conj41WEven, ConjectureId::Conj41BigW]
        .into_iter()
        .map(|id| conj41_one(id, n, primes))
        .collect()
}

fn conj42_int(n: u64) -> CheckResult {
    let started = Instant::now();
    let f = cache::f_poly(n);
    let bad = f.non_integral_terms();
    let witness = if bad.is_empty() {
        format!("f_{n} has integer coefficients (degree {})", f.degree().unwrap_or(0))
    } else {
        let i = bad[0];
        format!("coefficient of x^{i} is {}", f.coeff(i))
    };
    CheckResult::new(Suite::Conjectures, ConjectureId::Conj42Int.as_str(), params_of(&[("n", n as i64)]), Status::from_bool(bad.is_empty()))
        .with_witness(witness)
        .with_elapsed(started.elapsed())
}

fn conj42_mod32(n: u64) -> CheckResult {
    let started = Instant::now();
    let v = cache::f_poly(n).eval(&ri(1));
    let target = if n % 2 == 0 { 1 } else { -1 };
    let (ok, witness) = if v.is_integer() {
        let r = v.to_integer().mod_floor(&BigInt::from(32));
        let t = BigInt::from(target).mod_floor(&BigInt::from(32));
        (r == t, format!("f_{n}(1) = {v} ≡ {r} (mod 32); (-1)^{n} ≡ {t}"))
    } else {
        (false, format!("f_{n}(1) = {v} is not an integer"))
    };
    CheckResult::new(Suite::Conjectures, ConjectureId::Conj42Mod32.as_str(), params_of(&[("n", n as i64)]), Status::from_bool(ok))
        .with_witness(witness)
        .with_elapsed(started.elapsed())
}

/// `R_k(1) = sum_l C(k,l) C(k+l,l) / (2l-1)`.
fn r_at_one(k: u64) -> Rational {
    (0..=k)
        .map(|l| frac(binomial(k, l as i64) * binomial(k + l, l as i64), 2 * l as i64 - 1))
        .fold(Rational::zero(), |a, b| a + b)
}

/// `D_k(1) R_k(1)` for `k < p`.
fn dr_at_one(p: u64) -> Vec<Rational> {
    delannoy_values(&BigInt::one(), p as usize)
        .into_iter()
        .enumerate()
        .map(|(k, d)| ri(d) * r_at_one(k as u64))
        .collect()
}

/// `sum_{k=1}^{p-1} k D_k(x) R_k(x)` as a polynomial.
fn weighted_dr_poly(p: u64) -> RatPolynomial {
    let mut acc = RatPolynomial::zero();
    for k in 1..p {
        let term = &cache::delannoy(k).to_rational() * &r_poly_alt(k);
        acc += &term.scale(&ri(k));
    }
    acc
}

fn conj42_prime(id: ConjectureId, p: u64) -> Result<CheckResult> {
    let started = Instant::now();
    let params = params_of(&[("p", p as i64)]);
    let pb = BigInt::from(p);
    let minus_one = leg(-1, p);
    let q2 = || -> Result<Rational> { Ok(ri(fermat_quotient(&BigInt::from(2), p, 3)?.to_integer())) };
    let r = match id {
        ConjectureId::Conj49 => {
            let lhs = dr_at_one(p).into_iter().fold(Rational::zero(), |a, b| a + b);
            if p % 4 == 1 {
                let rhs = ri(-(p as i64))
                    + ri(8u32 * &pb * &pb) * q2()?
                    - ri(2u32 * pb.pow(3) * euler_number(p as usize - 3));
                congruence(id, params, &lhs, &rhs, p, 4, started)
            } else {
                congruence(id, params, &lhs, &ri(-5 * p as i64), p, 3, started)
            }
        }
        ConjectureId::Conj410 => {
            let lhs = dr_at_one(p)
                .into_iter()
                .enumerate()
                .skip(1)
                .map(|(k, t)| t / ri(k))
                .fold(Rational::zero(), |a, b| a + b);
            let rhs = ri(4 - minus_one) * q2()?;
            congruence(id, params, &lhs, &rhs, p, 1, started)
        }
        ConjectureId::Conj411 => {
            let lhs = dr_at_one(p)
                .into_iter()
                .enumerate()
                .map(|(k, t)| t * ri(k))
                .fold(Rational::zero(), |a, b| a + b);
            let rhs = frac(1, 2) + frac(3 * p as i64, 2) * ri(1 - 2 * minus_one);
            congruence(id, params, &lhs, &rhs, p, 2, started)
        }
        ConjectureId::Conj42Poly => {
            let poly = weighted_dr_poly(p);
            let mut failures = Vec::new();
            for x in 0..p {
                let lhs = poly.eval(&ri(x));
                let rhs = frac(BigInt::from(x).pow(p as u32 - 1), 2);
                let v = padic_valuation(&(&lhs - &rhs), p);
                if !v.is_none_or(|v| v >= 1) {
                    failures.push(format!("x = {x}: {}", residue_text(&lhs, p, 1)));
                }
            }
            let ok = failures.is_empty();
            let witness = if ok {
                format!("sum k D_k(x) R_k(x) ≡ x^(p-1)/2 (mod {p}) for all x in 0..{p}")
            } else {
                failures.join(" | ")
            };
            CheckResult::new(Suite::Conjectures, id.as_str(), params, Status::from_bool(ok))
                .with_witness(witness)
                .with_elapsed(started.elapsed())
        }
        other => return Err(Error::UnknownId(other.as_str().into())),
    };
    Ok(r)
}

/// Integrality and mod-32 verdicts for `n = 1..=n_max`, then the
/// per-prime congruences for each prime in `primes`.
pub fn conj42_checks(n_max: u64, primes: (u64, u64)) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.push(conj42_int(n));
        out.push(conj42_mod32(n));
    }
    for p in odd_primes_in(primes.0, primes.1) {
        for id in [ConjectureId::Conj49, ConjectureId::Conj410, ConjectureId::Conj411, ConjectureId::Conj42Poly] {
            out.push(conj42_prime(id, p)?);
        }
    }
    Ok(out)
}

/// `T_k(b,c)` and `M_k(b,c)` for `k < p`.
struct TmSums {
    t: Vec<BigInt>,
    m: Vec<BigInt>,
}

impl TmSums {
    fn new(b: i64, c: i64, p: u64) -> Self {
        let (b, c) = (BigInt::from(b), BigInt::from(c));
        Self {
            t: trinomial_values(&b, &c, p as usize),
            m: motzkin_values(&b, &c, p as usize),
        }
    }

    fn msq(&self, weighted: bool) -> BigInt {
        self.m
            .iter()
            .enumerate()
            .map(|(k, m)| if weighted { m * m * k } else { m * m })
            .sum()
    }

    fn tm(&self, weighted: bool) -> BigInt {
        self.t
            .iter()
            .zip(&self.m)
            .enumerate()
            .map(|(k, (t, m))| if weighted { t * m * k } else { t * m })
            .sum()
    }

    /// `sum_{k<p} T_k M_k / den^k`.
    fn tm_over(&self, den: i64) -> Rational {
        let den = BigInt::from(den);
        let n = self.t.len();
        let mut acc = BigInt::zero();
        let mut pow = BigInt::one();
        for k in (0..n).rev() {
            acc += &self.t[k] * &self.m[k] * &pow;
            pow *= &den;
        }
        Rational::new(acc, den.pow(n as u32 - 1))
    }
}

fn remark31_one(id: ConjectureId, p: u64) -> Result<CheckResult> {
    let started = Instant::now();
    let params = params_of(&[("p", p as i64)]);
    let e3 = leg(p as i64, 3);
    let pi = p as i64;
    let r = match id {
        ConjectureId::S14aC56 => {
            if p % 3 != 2 {
                return Ok(CheckResult::new(Suite::Conjectures, id.as_str(), params, Status::Skip)
                    .with_witness("stated for p ≡ 2 (mod 3)")
                    .with_elapsed(started.elapsed()));
            }
            let lhs = TmSums::new(3, 3, p).tm_over(-3);
            let pb = BigInt::from(p);
            let rhs = ri(pb.pow(3) - &pb * &pb - 3u32 * &pb);
            congruence(id, params, &lhs, &rhs, p, 4, started)
        }
        _ => {
            let sums = TmSums::new(1, 1, p);
            let (lhs, rhs, k) = match id {
                ConjectureId::R31Msq => (sums.msq(false), ri((2 - 6 * pi) * e3), 2),
                ConjectureId::R31Kmsq => (sums.msq(true), ri((9 * pi - 1) * e3), 2),
                ConjectureId::R31Tm => (sums.tm(false), frac(4 * e3, 3) + frac(pi * (1 - 9 * e3), 6), 2),
                ConjectureId::R31Ktm => (sums.tm(true), ri(leg(-1, p)) - frac(5 * e3, 3), 1),
                other => return Err(Error::UnknownId(other.as_str().into())),
            };
            congruence(id, params, &ri(lhs), &rhs, p, k, started)
        }
    };
    Ok(r)
}

/// The R31 congruences for `M_k = M_k(1,1)`, `T_k = T_k(1,1)` and the
/// quoted mod-`p^4` congruence for `(b,c) = (3,3)`.
pub fn remark31_checks(p: u64) -> Result<Vec<CheckResult>> {
    if p <= 3 || !is_prime(p) {
        return Err(Error::PredicateViolated {
            id: "R31".into(),
            reason: format!("p = {p} must be a prime above 3"),
        });
    }
    [
        ConjectureId::R31Msq,
        ConjectureId::R31Kmsq,
        ConjectureId::R31Tm,
        ConjectureId::R31Ktm,
        ConjectureId::S14aC56,
    ]
    .into_iter()
    .map(|id| remark31_one(id, p))
    .collect()
}

/// Runs one conjecture cell. Irreducibility cells use `primes` as the
/// irreducibility prime list.
pub fn verify_conjecture(id: ConjectureId, params: &Params, primes: &[u64]) -> Result<CheckResult> {
    let name = id.as_str();
    if id.is_irreducibility() {
        let n = param_at_least(name, params, "n", 2)? as u64;
        return conj41_one(id, n, primes);
    }
    match id {
        ConjectureId::Conj42Int => Ok(conj42_int(param_at_least(name, params, "n", 1)? as u64)),
        ConjectureId::Conj42Mod32 => Ok(conj42_mod32(param_at_least(name, params, "n", 1)? as u64)),
        _ => {
            let p = param(name, params, "p")?;
            let min = if id.is_remark31() { 5 } else { 3 };
            if p < min || !is_prime(p as u64) {
                return Err(Error::PredicateViolated {
                    id: name.into(),
                    reason: format!("p = {p} must be a prime of at least {min}"),
                });
            }
            if id.is_remark31() {
                remark31_one(id, p as u64)
            } else {
                conj42_prime(id, p as u64)
            }
        }
    }
}

/// Applies [`verify_conjecture`] to every cell of every id.
pub fn scan_conjectures(ids: &[ConjectureId], bounds: &CellBounds) -> Vec<CheckResult> {
    let primes = odd_primes_in(DEFAULT_IRREDUCIBILITY_PRIMES.0, DEFAULT_IRREDUCIBILITY_PRIMES.1);
    let mut out: Vec<CheckResult> = ids
        .iter()
        .flat_map(|&id| conjecture_cells(id, bounds).into_iter().map(move |c| (id, c)))
        .map(|(id, cell)| {
            verify_conjecture(id, &cell, &primes).unwrap_or_else(|e| {
                CheckResult::new(Suite::Conjectures, id.as_str(), cell, Status::Fail)
                    .with_witness(format!("error: {e}"))
            })
        })
        .collect();
    out.sort_by(|a, b| a.report_order(b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn primes_below_200() -> Vec<u64> {
        odd_primes_in(3, 199)
    }

    #[test]
    fn catalog_shape() {
        let names: Vec<&str> = ConjectureId::ALL.iter().map(|c| c.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert_eq!("R31_TM".parse::<ConjectureId>().unwrap(), ConjectureId::R31Tm);
    }

    #[test]
    fn conj41_small_n() {
        let rs = conj41_evidence(2, &primes_below_200()).unwrap();
        assert_eq!(rs.len(), 3);
        for r in &rs {
            assert!(matches!(r.status, Status::Evidence | Status::Inconclusive));
        }
        let even = conj41_polynomial(ConjectureId::Conj41WEven, 2).unwrap();
        assert_eq!(even.degree(), Some(2));
        assert_eq!(rs[2].witness, "degree 1; irreducible mod 3");
        assert!(conj41_evidence(1, &[3]).is_err());
    }

    #[test]
    fn conj41_without_primes_is_inconclusive() {
        let rs = conj41_evidence(3, &[]).unwrap();
        assert!(rs.iter().all(|r| r.status == Status::Inconclusive));
    }

    #[test]
    fn conj41_never_passes() {
        for n in 2..=12 {
            for r in conj41_evidence(n, &primes_below_200()).unwrap() {
                assert_ne!(r.status, Status::Pass);
            }
        }
    }

    #[test]
    fn f_examples() {
        assert_eq!(cache::f_poly(1).to_integer().unwrap(), IntPolynomial::from_i64s(&[-1]));
        assert_eq!(cache::f_poly(2).to_integer().unwrap(), IntPolynomial::from_i64s(&[-1, 0, 2]));
        let r = conj42_mod32(1);
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.starts_with("f_1(1) = -1"), "{}", r.witness);
        let r = conj42_mod32(2);
        assert!(r.witness.starts_with("f_2(1) = 1"), "{}", r.witness);
    }

    #[test]
    fn conj42_checks_pass_for_small_bounds() {
        for r in conj42_checks(30, (3, 31)).unwrap() {
            assert_eq!(r.status, Status::Pass, "{} {}: {}", r.id, r.params_string(), r.witness);
        }
    }

    #[test]
    fn conj49_at_three_uses_the_mod_p3_branch() {
        let r = conj42_prime(ConjectureId::Conj49, 3).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.contains("rhs = -15 ≡ 12 (mod 3^3)"), "{}", r.witness);
    }

    #[test]
    fn remark31_at_five() {
        let rs = remark31_checks(5).unwrap();
        assert_eq!(rs.len(), 5);
        assert!(rs[0].witness.starts_with("lhs = 103 ≡ 3 (mod 5^2); rhs = 28 ≡ 3"), "{}", rs[0].witness);
        assert!(rs[1].witness.starts_with("lhs = 381 ≡ 6 (mod 5^2); rhs = -44 ≡ 6"), "{}", rs[1].witness);
        assert!(rs.iter().all(|r| r.status == Status::Pass));
        assert_eq!(remark31_checks(7).unwrap()[4].status, Status::Skip);
        assert!(remark31_checks(3).is_err());
    }

    #[test]
    fn remark31_below_sixty() {
        for p in odd_primes_in(5, 59) {
            for r in remark31_checks(p).unwrap() {
                assert!(matches!(r.status, Status::Pass | Status::Skip), "{} p={p}: {}", r.id, r.witness);
            }
        }
    }

    #[test]
    fn dispatcher_validates_params() {
        let primes = [3u64];
        assert!(verify_conjecture(ConjectureId::R31Msq, &params_of(&[("p", 3)]), &primes).is_err());
        assert!(verify_conjecture(ConjectureId::Conj49, &params_of(&[("n", 3)]), &primes).is_err());
        let r = verify_conjecture(ConjectureId::Conj42Int, &params_of(&[("n", 5)]), &primes).unwrap();
        assert_eq!(r.suite, Suite::Conjectures);
    }
}
