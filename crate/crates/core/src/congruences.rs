//! Checks of the proved congruences and supercongruences, plus the O(p)
//! large-prime check of `W_p(y) mod p^2`.
//!
//! Each evaluator computes both sides as exact rationals (or as residues
//! modulo `p^k` on the large-prime path) and compares them by the p-adic
//! valuation of their difference.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::check::{param, param_at_least, params_of, CellBounds, CheckResult, Params, Status, Suite};
use crate::error::{Error, Result};
use crate::exact::{
    binomial, catalan_table, euler_number, fermat_quotient, is_prime, legendre_symbol, lucas_u_mod,
    mod_inverse, padic_valuation, prime_power, rational_mod, require_odd_prime, Rational,
};
use crate::padic::TrackedResidue;
use crate::sequences::{
    big_w_poly, delannoy_values, little_schroder_values, motzkin_values, stream::mod_stream,
    trinomial_values, u_lemma25, SequenceFamily,
};

/// Above this prime the Delannoy/Schröder sums run on modular streams.
pub const EXACT_LIMIT: u64 = 1000;

macro_rules! congruence_ids {
    ($($variant:ident => $name:literal, $reference:literal, $modulus:literal;)*) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum CongruenceId {
            $($variant,)*
        }

        impl CongruenceId {
            pub const ALL: &'static [CongruenceId] = &[$(CongruenceId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(CongruenceId::$variant => $name,)*
                }
            }

            pub fn reference(self) -> &'static str {
                match self {
                    $(CongruenceId::$variant => $reference,)*
                }
            }

            /// Shape of the modulus, e.g. `p^3`.
            pub fn modulus(self) -> &'static str {
                match self {
                    $(CongruenceId::$variant => $modulus,)*
                }
            }
        }
    };
}

congruence_ids! {
    C1_10 => "C_1_10", "Theorem 1.1(ii)", "p^3";
    C1_12 => "C_1_12", "Corollary 1.1, Eq. (1.12)", "p^3";
    C1_14 => "C_1_14", "Theorem 1.2, Eq. (1.14)", "p";
    C1_15 => "C_1_15", "Theorem 1.2, Eq. (1.15)", "p";
    C2_10 => "C_2_10", "Lemma 2.4, Eq. (2.10)", "p^2";
    C2_13 => "C_2_13", "Lemma 2.5, Eq. (2.13)", "p";
    C2_8 => "C_2_8", "Lemma 2.4, Eq. (2.8)", "p";
    C2_9 => "C_2_9", "Lemma 2.4, Eq. (2.9)", "p^2";
    C3_10 => "C_3_10", "Theorem 3.1(ii)", "p";
    C3_14 => "C_3_14", "Corollary 3.1, Eq. (3.14)", "p^3";
    C3_15 => "C_3_15", "Corollary 3.1, Eq. (3.15)", "p^3";
    C3_16 => "C_3_16", "Corollary 3.1, Eq. (3.16)", "p";
    C3_19 => "C_3_19", "Corollary 3.2, Eq. (3.19)", "p^3";
    C3_20 => "C_3_20", "Corollary 3.2, Eq. (3.20)", "p^3";
    C3_21 => "C_3_21", "Corollary 3.2, Eq. (3.21)", "p";
    C3_8 => "C_3_8", "Theorem 3.1(i), Eq. (3.8)", "p^2";
    C3_9 => "C_3_9", "Theorem 3.1(i), Eq. (3.9)", "p^3";
    CLiu => "C_LIU", "Remark 1.2 (Liu)", "p^4";
    CLucas => "C_LUCAS", "Section 2, Lucas sequences", "p";
    CS11bD => "C_S11B_D", "Section 1, [S11b]", "p";
    CS11bS => "C_S11B_S", "Section 1, [S11b]", "p";
    CS14aDsq => "C_S14A_DSQ", "Section 1, [S14a]", "p";
    CS14aInt => "C_S14A_INT", "Section 1, [S14a]", "integrality";
    CWolst => "C_WOLST", "Section 2, Wolstenholme", "p^3";
}

impl fmt::Display for CongruenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CongruenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CongruenceId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

impl CongruenceId {
    /// Grid keys scanned besides `p`.
    pub fn grid_keys(self) -> &'static [&'static str] {
        use CongruenceId::*;
        match self {
            C1_10 | C1_14 | C2_8 | C2_9 | C2_10 => &["x"],
            C3_8 | C3_9 | C3_10 => &["b", "c"],
            CLucas => &["A", "B"],
            CS14aInt => &["n"],
            _ => &[],
        }
    }

    /// Smallest prime the statement is made for.
    pub fn min_prime(self) -> u64 {
        use CongruenceId::*;
        match self {
            C3_14 | C3_15 | C3_16 | CS11bD | CS11bS | CLiu => 5,
            _ => 3,
        }
    }

    pub fn is_prime_indexed(self) -> bool {
        self != CongruenceId::CS14aInt
    }
}

/// Parameter cells of a default scan.
pub fn congruence_cells(id: CongruenceId, b: &CellBounds) -> Vec<Params> {
    if !id.is_prime_indexed() {
        return b
            .index_range("n", 1, 300)
            .map(|n| params_of(&[("n", n)]))
            .collect();
    }
    let primes = b.odd_primes(3, 99);
    let mut out = Vec::new();
    for p in primes {
        let p = p as i64;
        match id.grid_keys() {
            ["x"] => {
                for x in b.range("x", -10, 10) {
                    out.push(params_of(&[("p", p), ("x", x)]));
                }
                if id == CongruenceId::C2_9 {
                    out.push(params_of(&[("p", p)]));
                }
            }
            [k1, k2] => {
                let (lo, hi) = if *k1 == "A" { (-5, 5) } else { (-6, 6) };
                for v1 in b.range(k1, lo, hi) {
                    for v2 in b.range(k2, lo, hi) {
                        out.push(params_of(&[("p", p), (k1, v1), (k2, v2)]));
                    }
                }
            }
            _ => out.push(params_of(&[("p", p)])),
        }
    }
    out
}

fn ri(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

fn frac(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Rational {
    Rational::new(a.into(), b.into())
}

fn leg(a: &BigInt, p: u64) -> Result<i64> {
    Ok(legendre_symbol(a, p)? as i64)
}

/// `q_p(z)` as an integer representative modulo `p^k`.
fn fq(z: &BigInt, p: u64, k: u32) -> Result<BigInt> {
    Ok(fermat_quotient(z, p, k)?.to_integer())
}

fn residue_text(q: &Rational, p: u64, k: u32) -> String {
    let m = prime_power(p, k);
    let mod_text = if k == 1 { format!("{p}") } else { format!("{p}^{k}") };
    match rational_mod(q, &m) {
        Some(r) => format!("{q} ≡ {r} (mod {mod_text})"),
        None => format!("{q} (not {p}-integral)"),
    }
}

/// Comparison of two rationals modulo `p^k`.
struct Comparison {
    ok: bool,
    text: String,
}

fn compare(label: &str, lhs: &Rational, rhs: &Rational, p: u64, k: u32) -> Comparison {
    let v = padic_valuation(&(lhs - rhs), p);
    let ok = v.is_none_or(|v| v >= k as i64);
    let prefix = if label.is_empty() { String::new() } else { format!("{label}: ") };
    let val = match v {
        None => "difference is 0".to_string(),
        Some(v) => format!("ord_{p}(lhs - rhs) = {v}"),
    };
    Comparison {
        ok,
        text: format!(
            "{prefix}lhs = {}; rhs = {}; {val}",
            residue_text(lhs, p, k),
            residue_text(rhs, p, k)
        ),
    }
}

fn finish(id: CongruenceId, params: &Params, parts: Vec<Comparison>, started: Instant) -> CheckResult {
    let ok = parts.iter().all(|c| c.ok);
    let text: Vec<String> = parts.into_iter().map(|c| c.text).collect();
    CheckResult::new(Suite::Congruences, id.as_str(), params.clone(), Status::from_bool(ok))
        .with_witness(text.join(" | "))
        .with_elapsed(started.elapsed())
}

fn skip(id: CongruenceId, params: &Params, reason: impl Into<String>, started: Instant) -> CheckResult {
    CheckResult::new(Suite::Congruences, id.as_str(), params.clone(), Status::Skip)
        .with_witness(reason)
        .with_elapsed(started.elapsed())
}

fn divides(p: u64, n: &BigInt) -> bool {
    (n % BigInt::from(p)).is_zero()
}

/// `(sum_{k<p} D_k(x) s_{k+1}(x), sum_{k<p} k D_k(x) s_{k+1}(x))`, exact.
pub fn ds_sums_exact(x: &BigInt, p: u64) -> (BigInt, BigInt) {
    let d = delannoy_values(x, p as usize);
    let s = little_schroder_values(x, p as usize);
    let mut s0 = BigInt::zero();
    let mut s1 = BigInt::zero();
    for (k, (a, b)) in d.iter().zip(&s).enumerate() {
        let t = a * b;
        s1 += &t * k;
        s0 += t;
    }
    (s0, s1)
}

/// The same sums modulo `p^k`, from modular streams.
pub fn ds_sums_stream(x: &BigInt, p: u64, k: u32) -> Result<(BigInt, BigInt)> {
    let d = mod_stream(&SequenceFamily::DelannoyPoly, x, p, k, p - 1)?;
    // s_1 .. s_p
    let s = mod_stream(&SequenceFamily::LittleSchroderPoly, x, p, k, p)?;
    let mut s0 = TrackedResidue::zero(p, k);
    let mut s1 = TrackedResidue::zero(p, k);
    for (i, (a, b)) in d.iter().zip(&s).enumerate() {
        let t = a * b;
        s1 = &s1 + &t.scale(&BigInt::from(i));
        s0 = &s0 + &t;
    }
    let m = prime_power(p, k);
    Ok((s0.residue_mod_power(k)?.mod_floor(&m), s1.residue_mod_power(k)?.mod_floor(&m)))
}

fn ds_sums(x: &BigInt, p: u64, k: u32) -> Result<(BigInt, BigInt)> {
    if p <= EXACT_LIMIT {
        Ok(ds_sums_exact(x, p))
    } else {
        ds_sums_stream(x, p, k)
    }
}

/// `sum_{k<p} T_k(b,c) M_k(b,c) w(k) / d^k` with weight `w(k)` in {1, k}.
fn tm_sum(b: &BigInt, c: &BigInt, den: &BigInt, p: u64, weighted: bool) -> Rational {
    let t = trinomial_values(b, c, p as usize);
    let m = motzkin_values(b, c, p as usize);
    // Scaled by den^(p-1) to keep the sum integral until the end.
    let mut acc = BigInt::zero();
    let mut pow = BigInt::one();
    for k in (0..p as usize).rev() {
        let mut term = &t[k] * &m[k] * &pow;
        if weighted {
            term *= k;
        }
        acc += term;
        pow *= den;
    }
    Rational::new(acc, den.pow(p as u32 - 1))
}

/// Large Schröder numbers `S_0 .. S_{count-1}` from the Catalan sum form.
fn large_schroder_numbers(count: usize) -> Vec<BigInt> {
    let cat = catalan_table(count);
    (0..count as u64)
        .map(|n| (0..=n).map(|k| binomial(n + k, 2 * k as i64) * &cat[k as usize]).sum())
        .collect()
}

/// The representative of `-1/4` modulo `p^2` in `[0, p^2)`.
pub fn minus_quarter(p: u64) -> BigInt {
    let m = prime_power(p, 2);
    (-mod_inverse(&BigInt::from(4), &m).expect("p is odd")).mod_floor(&m)
}

/// Runs one congruence check at prime `p`.
pub fn verify_congruence(id: CongruenceId, p: u64, params: &Params) -> Result<CheckResult> {
    let mut cell = params.clone();
    if id.is_prime_indexed() {
        cell.insert("p".into(), p as i64);
    }
    verify_congruence_cell(id, &cell)
}

/// Runs one congruence check; the prime, if any, is the `p` parameter.
pub fn verify_congruence_cell(id: CongruenceId, params: &Params) -> Result<CheckResult> {
    use CongruenceId::*;
    let started = Instant::now();
    let name = id.as_str();
    if id == CS14aInt {
        let n = param_at_least(name, params, "n", 1)? as u64;
        let d = delannoy_values(&BigInt::one(), n as usize);
        let sum: BigInt = d.iter().enumerate().map(|(k, v)| v * v * (2 * k + 1)).sum();
        let q = frac(sum, n * n);
        let ok = q.is_integer();
        return Ok(CheckResult::new(Suite::Congruences, name, params.clone(), Status::from_bool(ok))
            .with_witness(format!("(1/n^2) sum = {q}"))
            .with_elapsed(started.elapsed()));
    }
    let p = param(name, params, "p")?;
    if p < 3 || !is_prime(p as u64) {
        return Err(Error::PredicateViolated {
            id: name.into(),
            reason: format!("p = {p} is not an odd prime"),
        });
    }
    let p = p as u64;
    if p < id.min_prime() {
        return Ok(skip(id, params, format!("stated for p >= {}", id.min_prime()), started));
    }
    let pb = BigInt::from(p);
    let pr = ri(p);
    let get = |key: &str| param(name, params, key).map(BigInt::from);
    let parts = match id {
        C1_10 => {
            let x = get("x")?;
            let (lhs, _) = ds_sums(&x, p, 3)?;
            let x1 = &x + 1u32;
            let y = &x * &x1;
            let (branch, rhs) = if divides(p, &x) || divides(p, &x1) {
                ("x ≡ 0, -1", &pr * (ri(1) - ri(y.clone())))
            } else {
                let bracket = ri(&x * &x * fq(&x, p, 3)?) - ri(&x1 * &x1 * fq(&x1, p, 3)?);
                let rhs = ri(2u32 * &pb * &pb) + frac(2u32 * &x + 1u32, y.clone()) * ri(&pb * &pb) * bracket;
                let label = if divides(p, &(2u32 * &x + 1u32)) { "generic, x ≡ -1/2" } else { "generic" };
                (label, rhs)
            };
            vec![compare(branch, &ri(lhs), &rhs, p, 3)]
        }
        C1_12 => {
            let (lhs, _) = ds_sums(&BigInt::one(), p, 3)?;
            let rhs = ri(2u32 * &pb * &pb) * (ri(1) - ri(3u32 * fq(&BigInt::from(2), p, 3)?));
            vec![compare("", &ri(lhs), &rhs, p, 3)]
        }
        C1_14 => {
            let x = get("x")?;
            let (_, lhs) = ds_sums(&x, p, 1)?;
            let y = &x * (&x + 1u32);
            let rhs = 2u32 * y.modpow(&BigInt::from((p - 1) / 2), &pb);
            vec![compare("", &ri(lhs), &ri(rhs), p, 1)]
        }
        C1_15 => {
            let (_, lhs) = ds_sums(&BigInt::one(), p, 1)?;
            let rhs = 2 * leg(&BigInt::from(2), p)?;
            vec![compare("", &ri(lhs), &ri(rhs), p, 1)]
        }
        C2_8 | C2_9 | C2_10 => {
            let derived = id == C2_9 && !params.contains_key("x");
            let x = if derived { minus_quarter(p) } else { get("x")? };
            let four_x1 = 4u32 * &x + 1u32;
            if divides(p, &x) {
                return Ok(skip(id, params, format!("{p} divides x"), started));
            }
            let quarter = divides(p, &four_x1);
            if id == C2_9 && !quarter {
                return Ok(skip(id, params, "x is not ≡ -1/4 (mod p)", started));
            }
            if id == C2_10 && quarter {
                return Ok(skip(id, params, "x ≡ -1/4 (mod p)", started));
            }
            let wp = ri(big_w_poly(p).eval(&x));
            let e = leg(&four_x1, p)?;
            match id {
                C2_8 => {
                    let rhs = frac(four_x1.clone(), 2u32 * &x) * ri(e - 1);
                    vec![compare("", &wp, &rhs, p, 1)]
                }
                C2_9 => {
                    let label = if derived { format!("x = {x}") } else { String::new() };
                    vec![compare(&label, &wp, &ri(2u32 * &pb), p, 2)]
                }
                _ => {
                    let m2 = prime_power(p, 2);
                    let xp = x.modpow(&BigInt::from(p - 1), &m2);
                    let lucas = lucas_u_mod((p as i64 - e) as u64, &(2u32 * &x + 1u32), &(&x * &x), &m2);
                    let rhs = ri(2u32 * &pb)
                        + frac(four_x1.clone(), 2u32 * &x) * (ri(1) - ri(xp) + ri(p + 1) * ri(e - 1))
                        - frac(four_x1.clone(), 4u32 * x.pow((2 - e) as u32))
                            * ri(2u32 * &x + BigInt::from(e))
                            * ri(lucas);
                    vec![compare("", &wp, &rhs, p, 2)]
                }
            }
        }
        C2_13 => {
            let cat = catalan_table(p as usize + 1);
            let half = (p - 1) / 2;
            let mut parts = Vec::new();
            let mut bad = Vec::new();
            for j in 0..=p {
                let lhs = ri(cat[j as usize].pow(2)) * u_lemma25(j, p);
                let target = if j == half { 2 } else { 0 };
                let c = compare(&format!("j = {j}"), &lhs, &ri(target), p, 1);
                if j == half {
                    parts.push(c.text.clone());
                }
                if !c.ok {
                    bad.push(c);
                }
            }
            if bad.is_empty() {
                vec![Comparison {
                    ok: true,
                    text: format!("all j in 0..={p} hold; {}", parts.join("")),
                }]
            } else {
                bad
            }
        }
        CWolst => {
            let lhs = ri(binomial(2 * p - 1, p as i64 - 1));
            let k = if p > 3 { 3 } else { 2 };
            vec![compare(&format!("mod {p}^{k}"), &lhs, &ri(1), p, k)]
        }
        C3_8 | C3_9 | C3_10 => {
            let b = get("b")?;
            let c = get("c")?;
            let d = &b * &b - 4u32 * &c;
            if id == C3_10 {
                if divides(p, &d) {
                    return Ok(skip(id, params, format!("{p} divides d = {d}"), started));
                }
                let lhs = tm_sum(&b, &c, &d, p, true);
                let rhs = 2 * leg(&(&c * &d), p)?;
                vec![compare("", &lhs, &ri(rhs), p, 1)]
            } else {
                if divides(p, &(&c * &d)) {
                    return Ok(skip(id, params, format!("{p} divides cd = {}", &c * &d), started));
                }
                let lhs = tm_sum(&b, &c, &d, p, false);
                let e = leg(&d, p)?;
                let b2 = &b * &b;
                let r8 = frac(&pb * &b2, 2u32 * &c) * ri(e - 1);
                if id == C3_8 {
                    vec![compare("", &lhs, &r8, p, 2)]
                } else {
                    let m2 = prime_power(p, 2);
                    let lucas = lucas_u_mod((p as i64 - e) as u64, &(&b2 - 2u32 * &c), &(&c * &c), &m2);
                    let inner = ri(&b2 * (fq(&d, p, 2)? - fq(&c, p, 2)? + BigInt::from(e)) - &d);
                    let rhs = &r8 + frac(&pb * &pb, 2u32 * &c) * inner
                        - frac(&pb * &b2, 4u32 * c.pow((2 - e) as u32))
                            * ri(2u32 * &c + &d * BigInt::from(e))
                            * ri(lucas);
                    vec![compare("", &lhs, &rhs, p, 3)]
                }
            }
        }
        C3_14 | C3_15 | C3_16 => {
            let e3 = leg(&pb, 3)?;
            let minus3 = BigInt::from(-3);
            let one = BigInt::one();
            let three = BigInt::from(3);
            match id {
                C3_14 => {
                    let lhs = tm_sum(&one, &one, &minus3, p, false);
                    let rhs = frac(pb.clone(), 2) * ri(e3 - 1)
                        + frac(&pb * &pb, 2) * ri(fq(&three, p, 2)? + BigInt::from(e3 + 3));
                    vec![compare("", &lhs, &rhs, p, 3)]
                }
                C3_15 => {
                    let lhs = tm_sum(&three, &three, &minus3, p, false);
                    let rhs = frac(3u32 * &pb, 2) * ri(e3 - 1) + frac(&pb * &pb, 2) * ri(3 * e3 + 1);
                    vec![compare("", &lhs, &rhs, p, 3)]
                }
                _ => {
                    let a = tm_sum(&one, &one, &minus3, p, true);
                    let b = tm_sum(&three, &three, &minus3, p, true);
                    let em1 = leg(&BigInt::from(-1), p)?;
                    vec![
                        compare("(1,1)", &a, &ri(2 * e3), p, 1),
                        compare("(3,3)", &b, &ri(2 * em1), p, 1),
                    ]
                }
            }
        }
        C3_19 | C3_20 | C3_21 => {
            if p == 5 {
                return Ok(skip(id, params, "stated for p != 5", started));
            }
            let e5 = leg(&pb, 5)?;
            let five = BigInt::from(5);
            let m2 = prime_power(p, 2);
            let fib = ri(lucas_u_mod((p as i64 - e5) as u64, &BigInt::one(), &BigInt::from(-1), &m2));
            match id {
                C3_19 => {
                    let lhs = tm_sum(&BigInt::one(), &BigInt::from(-1), &five, p, false);
                    let rhs = frac(pb.clone(), 2) * ri(1 - e5)
                        + frac(&pb * &pb, 2) * ri(BigInt::from(5 - e5) - fq(&five, p, 2)?)
                        + frac(pb.clone(), 2) * ri(5 - 2 * e5) * &fib;
                    vec![compare("", &lhs, &rhs, p, 3)]
                }
                C3_20 => {
                    let lhs = tm_sum(&five, &five, &five, p, false);
                    let rhs = frac(5u32 * &pb, 2) * ri(e5 - 1) + frac(&pb * &pb, 2) * ri(5 * e5 - 1)
                        - frac(5u32 * &pb, 2) * ri(1 + 2 * e5) * &fib;
                    vec![compare("", &lhs, &rhs, p, 3)]
                }
                _ => {
                    let em5 = leg(&BigInt::from(-5), p)?;
                    let a = ri(em5) * tm_sum(&BigInt::one(), &BigInt::from(-1), &five, p, true);
                    let b = tm_sum(&five, &five, &five, p, true);
                    vec![compare("(1,-1)", &a, &ri(2), p, 1), compare("(5,5)", &b, &ri(2), p, 1)]
                }
            }
        }
        CLucas => {
            let a = get("A")?;
            let b = get("B")?;
            let delta = &a * &a - 4u32 * &b;
            if delta.is_zero() {
                return Ok(skip(id, params, "discriminant is 0", started));
            }
            let e = leg(&delta, p)?;
            let up = lucas_u_mod(p, &a, &b, &pb);
            let mut parts = vec![compare("u_p", &ri(up), &ri(e), p, 1)];
            if !divides(p, &b) {
                let u = lucas_u_mod((p as i64 - e) as u64, &a, &b, &pb);
                parts.push(compare(&format!("u_{}", p as i64 - e), &ri(u), &ri(0), p, 1));
            }
            parts
        }
        CS11bD => {
            let d = delannoy_values(&BigInt::one(), p as usize);
            let lhs = (1..p)
                .map(|k| frac(d[k as usize].clone(), k * k))
                .fold(Rational::zero(), |a, b| a + b);
            let sign = if (p - 1) / 2 % 2 == 0 { 1 } else { -1 };
            let rhs = ri(euler_number(p as usize - 3) * (2 * sign));
            vec![compare("", &lhs, &rhs, p, 1)]
        }
        CS11bS => {
            let s = large_schroder_numbers(p as usize);
            let six = BigInt::from(6);
            let lhs = (1..p as usize)
                .map(|k| Rational::new(s[k].clone(), six.pow(k as u32)))
                .fold(Rational::zero(), |a, b| a + b);
            vec![compare("", &lhs, &ri(0), p, 1)]
        }
        CS14aDsq => {
            let d = delannoy_values(&BigInt::one(), p as usize);
            let lhs: BigInt = d.iter().map(|v| v * v).sum();
            vec![compare("", &ri(lhs), &ri(leg(&BigInt::from(2), p)?), p, 1)]
        }
        CLiu => {
            let d = delannoy_values(&BigInt::one(), p as usize);
            let s = large_schroder_numbers(p as usize);
            let lhs: BigInt = (1..p as usize).map(|k| &d[k] * &s[k]).sum();
            let harmonic = (1..p)
                .map(|k| frac(if k % 2 == 0 { 4 } else { 2 }, k))
                .fold(Rational::zero(), |a, b| a + b);
            let rhs = ri(-2 * p as i64) * harmonic;
            vec![compare("", &ri(lhs), &rhs, p, 4)]
        }
        CS14aInt => unreachable!("handled above"),
    };
    Ok(finish(id, params, parts, started))
}

/// Applies [`verify_congruence_cell`] to every cell of every id.
pub fn scan_congruences(ids: &[CongruenceId], bounds: &CellBounds) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for &id in ids {
        for cell in congruence_cells(id, bounds) {
            out.push(verify_congruence_cell(id, &cell).unwrap_or_else(|e| {
                CheckResult::new(Suite::Congruences, id.as_str(), cell.clone(), Status::Fail)
                    .with_witness(format!("error: {e}"))
            }));
        }
    }
    out.sort_by(|a, b| a.report_order(b));
    out
}

/// `W_p(y) mod p^2` by the term-ratio method: the terms
/// `t_k = w(p,k) C_{k-1} y^(k-1)` satisfy
/// `t_{k+1} / t_k = (p-k)(p+k+1) / (k(k+1)) * 2(2k-1) / (k+1) * y`,
/// and `t_p = 2 C(2p-1,p-1)^2 / ((p+1)(2p-1)) * y^(p-1)` is added directly.
pub fn big_w_mod_p2(p: u64, y: &BigInt) -> Result<TrackedResidue> {
    require_odd_prime(p)?;
    let prec = 2;
    let m = prime_power(p, prec);
    let yt = TrackedResidue::from_integer(y, p, prec);
    let mut term = TrackedResidue::from_i64(1, p, prec);
    let mut sum = term.clone();
    for k in 1..p - 1 {
        let num = BigInt::from(p - k) * BigInt::from(p + k + 1) * BigInt::from(2 * (2 * k - 1));
        let den = BigInt::from(k) * BigInt::from(k + 1) * BigInt::from(k + 1);
        let step = TrackedResidue::from_integer(&num, p, prec)
            .checked_div(&TrackedResidue::from_integer(&den, p, prec))?;
        term = &(&term * &step) * &yt;
        sum = &sum + &term;
    }
    // C(2p-1, p-1) = prod_{k<p} (p+k)/k, all factors units.
    let mut central = BigInt::one();
    for k in 1..p {
        central = (central * BigInt::from(p + k) * mod_inverse(&BigInt::from(k), &m)?).mod_floor(&m);
    }
    let den = BigInt::from(p + 1) * BigInt::from(2 * p - 1);
    let last = TrackedResidue::from_integer(&(2u32 * &central * &central), p, prec)
        .checked_div(&TrackedResidue::from_integer(&den, p, prec))?;
    let ypow = TrackedResidue::from_integer(&y.modpow(&BigInt::from(p - 1), &m), p, prec);
    sum = &sum + &(&last * &ypow);
    sum.require(prec)?;
    Ok(sum.truncate(prec))
}

/// The large-prime check at `p`: `q_p(2) ≡ 1/3 (mod p)` and
/// `W_p(y) ≡ 0 (mod p^2)`.
pub fn bigprime_remark12(p: u64, y: &BigInt) -> Result<CheckResult> {
    let started = Instant::now();
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut params = params_of(&[("p", p as i64)]);
    if let Ok(y) = i64::try_from(y) {
        params.insert("y".into(), y);
    }
    let done = |status: Status, witness: String| {
        CheckResult::new(Suite::Bigprime, "REMARK_1_2", params.clone(), status)
            .with_witness(witness)
            .with_elapsed(started.elapsed())
    };
    if p == 2 {
        return Err(Error::NotOddPrime(p));
    }
    if p == 3 {
        return Ok(done(Status::Skip, "1/3 not defined mod p=3".into()));
    }
    let pb = BigInt::from(p);
    let q = fermat_quotient(&BigInt::from(2), p, 1)?.residue_mod_power(1)?;
    let third = mod_inverse(&BigInt::from(3), &pb)?;
    let a_ok = q == third;
    let w = big_w_mod_p2(p, y)?;
    let w_res = w.residue_mod_power(2)?;
    let b_ok = w_res.is_zero();
    let mut witness = format!(
        "(a) q_p(2) ≡ {q}, 1/3 ≡ {third} (mod p): {}; (b) W_p({y}) ≡ {w_res} (mod p^2): {}",
        if a_ok { "ok" } else { "FAILED" },
        if b_ok { "ok" } else { "FAILED" },
    );
    if a_ok && b_ok {
        witness.push_str("; hence sum_{k<p} D_k s_{k+1} = p W_p(2) ≡ 0 (mod p^3)");
    }
    Ok(done(Status::from_bool(a_ok && b_ok), witness))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cell(id: CongruenceId, pairs: &[(&str, i64)]) -> CheckResult {
        verify_congruence_cell(id, &params_of(pairs)).unwrap()
    }

    #[test]
    fn catalog_shape() {
        assert_eq!(CongruenceId::ALL.len(), 24);
        let names: Vec<&str> = CongruenceId::ALL.iter().map(|c| c.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
        assert_eq!("C_LIU".parse::<CongruenceId>().unwrap(), CongruenceId::CLiu);
        assert!("C_NOPE".parse::<CongruenceId>().is_err());
    }

    #[test]
    fn worked_examples() {
        let r = cell(CongruenceId::C1_12, &[("p", 3)]);
        assert_eq!(r.status, Status::Pass, "{}", r.witness);
        assert!(r.witness.contains("lhs = 153 ≡ 18 (mod 3^3)"), "{}", r.witness);
        assert!(r.witness.contains("rhs = -36 ≡ 18 (mod 3^3)"), "{}", r.witness);
        let r = cell(CongruenceId::C1_15, &[("p", 3)]);
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.contains("lhs = 295 ≡ 1 (mod 3)"), "{}", r.witness);
        let r = cell(CongruenceId::C2_9, &[("p", 5), ("x", 1)]);
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.contains("lhs = 1135 ≡ 10 (mod 5^2)"), "{}", r.witness);
        let r = cell(CongruenceId::C3_10, &[("p", 5), ("b", 1), ("c", 1)]);
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.contains("≡ 3 (mod 5)"), "{}", r.witness);
        let r = cell(CongruenceId::CWolst, &[("p", 5)]);
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.contains("126 ≡ 1 (mod 5^3)"), "{}", r.witness);
    }

    #[test]
    fn predicates_skip() {
        assert_eq!(cell(CongruenceId::C2_8, &[("p", 5), ("x", 10)]).status, Status::Skip);
        assert_eq!(cell(CongruenceId::C2_9, &[("p", 5), ("x", 2)]).status, Status::Skip);
        assert_eq!(cell(CongruenceId::C2_10, &[("p", 5), ("x", 1)]).status, Status::Skip);
        assert_eq!(cell(CongruenceId::CLiu, &[("p", 3)]).status, Status::Skip);
        assert_eq!(cell(CongruenceId::C3_19, &[("p", 5)]).status, Status::Skip);
        assert_eq!(cell(CongruenceId::C3_8, &[("p", 3), ("b", 1), ("c", 3)]).status, Status::Skip);
        assert!(matches!(
            verify_congruence_cell(CongruenceId::C1_12, &params_of(&[("p", 9)])),
            Err(Error::PredicateViolated { .. })
        ));
        assert!(matches!(
            verify_congruence_cell(CongruenceId::C1_10, &params_of(&[("p", 7)])),
            Err(Error::MissingParam { .. })
        ));
    }

    #[test]
    fn scan_small_primes() {
        let b = CellBounds {
            primes: Some((3, 7)),
            ..CellBounds::default()
        };
        let results = scan_congruences(&[CongruenceId::C1_15], &b);
        assert_eq!(results.len(), 3);
        assert!(results.iter().all(|r| r.status == Status::Pass));
    }

    #[test]
    fn all_entries_pass_below_thirty() {
        let b = CellBounds {
            primes: Some((3, 29)),
            n_max: Some(40),
            ..CellBounds::default()
        };
        for r in scan_congruences(CongruenceId::ALL, &b) {
            assert!(
                matches!(r.status, Status::Pass | Status::Skip),
                "{} {}: {}",
                r.id,
                r.params_string(),
                r.witness
            );
        }
    }

    #[test]
    fn c1_10_branches_partition() {
        for p in [3u64, 5, 7, 11] {
            for x in -10..=10 {
                let r = cell(CongruenceId::C1_10, &[("p", p as i64), ("x", x)]);
                let special = r.witness.starts_with("x ≡ 0, -1");
                let generic = r.witness.starts_with("generic");
                assert!(special ^ generic, "{}", r.witness);
            }
        }
    }

    #[test]
    fn stream_and_exact_sums_agree() {
        for p in [3u64, 5, 7, 11, 13] {
            for x in -4..=4 {
                let x = BigInt::from(x);
                let (a0, a1) = ds_sums_exact(&x, p);
                let (b0, b1) = ds_sums_stream(&x, p, 3).unwrap();
                let m = prime_power(p, 3);
                assert_eq!(a0.mod_floor(&m), b0);
                assert_eq!(a1.mod_floor(&m), b1);
            }
        }
    }

    #[test]
    fn term_ratio_matches_exact_polynomial() {
        for p in [5u64, 7, 11, 13, 17, 19, 23, 29, 31] {
            for y in [-7i64, -2, 1, 2, 3, 10] {
                let yb = BigInt::from(y);
                let fast = big_w_mod_p2(p, &yb).unwrap().residue_mod_power(2).unwrap();
                let exact = big_w_poly(p).eval(&yb).mod_floor(&prime_power(p, 2));
                assert_eq!(fast, exact, "p={p} y={y}");
            }
        }
    }

    #[test]
    fn bigprime_small_cases() {
        let r = bigprime_remark12(3, &BigInt::from(2)).unwrap();
        assert_eq!(r.status, Status::Skip);
        assert_eq!(r.witness, "1/3 not defined mod p=3");
        let r = bigprime_remark12(5, &BigInt::from(2)).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.contains("q_p(2) ≡ 3, 1/3 ≡ 2"), "{}", r.witness);
        assert_eq!(bigprime_remark12(9, &BigInt::from(2)).unwrap_err(), Error::NotPrime(9));
    }

    #[test]
    fn minus_quarter_is_exact_mod_p2() {
        for p in [3u64, 5, 7, 97] {
            let x = minus_quarter(p);
            assert!((4u32 * x + 1u32).mod_floor(&prime_power(p, 2)).is_zero());
        }
    }
}
