//! Exact checks of the polynomial and integer identities.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::check::{param, param_at_least, params_of, CellBounds, CheckResult, Params, Status, Suite};
use crate::error::{Error, Result};
use crate::exact::{binomial, catalan, catalan_table, is_prime, narayana, Rational};
use crate::poly::{series_gf_check, IntPolynomial, RatPolynomial};
use crate::sequences::{
    self, big_w_poly, bracket, cache, delannoy_general, delannoy_poly_binomial, delannoy_poly_squares,
    f_lemma25, motzkin_values, schroder_large_poly, schroder_large_poly_alt, schroder_little_poly,
    small_w_poly, trinomial_values, u_lemma25, w_coeff, w_row,
};

macro_rules! identity_ids {
    ($($variant:ident => $name:literal, $reference:literal, $key:literal;)*) => {
        /// Catalog of checked identities, in lexicographic order of their ids.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum IdentityId {
            $($variant,)*
        }

        impl IdentityId {
            pub const ALL: &'static [IdentityId] = &[$(IdentityId::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $name,)*
                }
            }

            pub fn reference(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $reference,)*
                }
            }

            /// The parameter bounded by `n_max`.
            pub fn index_key(self) -> &'static str {
                match self {
                    $(IdentityId::$variant => $key,)*
                }
            }
        }
    };
}

identity_ids! {
    Eq1_11Int => "EQ_1_11_INT", "Corollary 1.1", "n";
    Eq1_13 => "EQ_1_13", "Corollary 1.2", "n";
    Eq1_2Cross => "EQ_1_2_CROSS", "Eq. (1.2)", "n";
    Eq1_7 => "EQ_1_7", "Theorem 1.1(i)", "n";
    Eq2_11 => "EQ_2_11", "Eq. (2.11)", "k";
    Eq2_2 => "EQ_2_2", "Lemma 2.1, Eq. (2.2)", "n";
    Eq2_3 => "EQ_2_3", "Lemma 2.1, Eq. (2.3)", "n";
    Eq2_4 => "EQ_2_4", "Lemma 2.1, Eq. (2.4)", "n";
    Eq2_5 => "EQ_2_5", "Lemma 2.2, Eq. (2.5)", "n";
    Eq2_6 => "EQ_2_6", "Lemma 2.2, Eq. (2.6)", "n";
    Eq2_7 => "EQ_2_7", "Lemma 2.3", "n";
    Eq3_12To18 => "EQ_3_12_18", "Corollaries 3.1 and 3.2, Eqs. (3.12), (3.13), (3.17), (3.18)", "n";
    Eq3_3Square => "EQ_3_3_SQUARE", "Lemma 3.1, Eqs. (3.3), (3.4)", "n";
    Eq3_5And6 => "EQ_3_5_6", "Lemma 3.1, Eqs. (3.5), (3.6)", "n";
    Eq3_7 => "EQ_3_7", "Theorem 3.1(i)", "n";
    Eq4_1 => "EQ_4_1", "Eq. (4.1)", "n";
    Eq4_4 => "EQ_4_4", "Eq. (4.4)", "n";
    Eq4_5 => "EQ_4_5", "Eq. (4.5)", "n";
    Eq4_6 => "EQ_4_6", "Eq. (4.6)", "N";
    EqCor12Aux => "EQ_COR12_AUX", "proof of Corollary 1.2", "m";
    EqL25Rec => "EQ_L25_REC", "proof of Lemma 2.5", "p";
    EqS2S => "EQ_S2S", "Section 1, S_n = 2 s_n", "n";
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Registry item for one identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub reference: &'static str,
    /// Human-readable default ranges.
    pub defaults: String,
}

fn defaults_text(id: IdentityId) -> String {
    let b = CellBounds::default();
    let cells = identity_cells(id, &b);
    let keys: Vec<&String> = cells.first().map(|c| c.keys().collect()).unwrap_or_default();
    let parts: Vec<String> = keys
        .iter()
        .map(|k| {
            let lo = cells.iter().map(|c| c[*k]).min().unwrap_or(0);
            let hi = cells.iter().map(|c| c[*k]).max().unwrap_or(0);
            format!("{k}={lo}..{hi}")
        })
        .collect();
    format!("{} ({} cells)", parts.join(" "), cells.len())
}

pub fn list_identities() -> Vec<CatalogEntry> {
    IdentityId::ALL
        .iter()
        .map(|&id| CatalogEntry {
            id: id.as_str(),
            reference: id.reference(),
            defaults: defaults_text(id),
        })
        .collect()
}

fn square_root(n: i64) -> Option<i64> {
    if n < 0 {
        return None;
    }
    let r = (n as f64).sqrt().round() as i64;
    (r - 1..=r + 1).find(|&s| s >= 0 && s * s == n)
}

/// Parameter cells for a default scan, honouring grid overrides and `n_max`.
pub fn identity_cells(id: IdentityId, b: &CellBounds) -> Vec<Params> {
    use IdentityId::*;
    let one = |key: &str, lo: i64, hi: i64| -> Vec<Params> {
        b.index_range(key, lo, hi).map(|v| params_of(&[(key, v)])).collect()
    };
    match id {
        Eq1_7 => one("n", 1, 300),
        Eq1_11Int | Eq1_13 => one("n", 1, 200),
        Eq1_2Cross | Eq2_2 => one("n", 0, 200),
        Eq2_3 | Eq2_4 | Eq2_5 | Eq2_6 | Eq4_1 | Eq4_5 | EqS2S => one("n", 1, 200),
        Eq2_11 => one("k", 1, 120),
        Eq3_5And6 => one("n", 0, 150),
        Eq3_12To18 => one("n", 1, 150),
        EqCor12Aux => one("m", 0, 200),
        Eq4_6 => {
            let n = b.n_max.map_or(50, |cap| cap.clamp(1, 50));
            b.range("N", n, n).map(|v| params_of(&[("N", v)])).collect()
        }
        Eq2_7 | Eq4_4 => {
            let mut out = Vec::new();
            let hi = if id == Eq2_7 { 80 } else { 60 };
            for n in b.index_range("n", 1, hi) {
                for m in b.range("m", 1, n) {
                    if (1..=n).contains(&m) {
                        out.push(params_of(&[("m", m), ("n", n)]));
                    }
                }
            }
            out
        }
        Eq3_7 => {
            let mut out = Vec::new();
            for n in b.index_range("n", 1, 60) {
                for bb in b.range("b", -6, 6) {
                    for c in b.range("c", -6, 6) {
                        out.push(params_of(&[("b", bb), ("c", c), ("n", n)]));
                    }
                }
            }
            out
        }
        Eq3_3Square => {
            let mut out = Vec::new();
            for n in b.index_range("n", 0, 30) {
                for bb in b.range("b", -6, 6) {
                    for c in b.range("c", -6, 6) {
                        let d = bb * bb - 4 * c;
                        if d > 0 && square_root(d).is_some() {
                            out.push(params_of(&[("b", bb), ("c", c), ("n", n)]));
                        }
                    }
                }
            }
            out
        }
        EqL25Rec => {
            let mut out = Vec::new();
            let hi = b.n_max.unwrap_or(59).max(0) as u64;
            for p in b.odd_primes(3, hi) {
                for j in b.range("j", 0, p as i64 - 1) {
                    if (0..p as i64).contains(&j) {
                        out.push(params_of(&[("j", j), ("p", p as i64)]));
                    }
                }
            }
            out
        }
    }
}

fn result(id: IdentityId, params: &Params, ok: bool, witness: String, started: Instant) -> CheckResult {
    CheckResult::new(Suite::Identities, id.as_str(), params.clone(), Status::from_bool(ok))
        .with_witness(witness)
        .with_elapsed(started.elapsed())
}

fn sides(lhs: impl fmt::Display, rhs: impl fmt::Display) -> String {
    format!("lhs = {lhs}; rhs = {rhs}")
}

fn u64_param(id: IdentityId, params: &Params, key: &str, min: i64) -> Result<u64> {
    Ok(param_at_least(id.as_str(), params, key, min)? as u64)
}

fn rat_compose(p: &RatPolynomial, inner: &IntPolynomial) -> RatPolynomial {
    let inner = inner.to_rational();
    let mut acc = RatPolynomial::zero();
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * &inner) + &RatPolynomial::constant(c.clone());
    }
    acc
}

fn ri(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// `sum_k c_k y^k` with `y = x(x+1)`.
fn in_x_x1(coeffs: Vec<BigInt>) -> IntPolynomial {
    IntPolynomial::new(coeffs).compose(cache::x_x1())
}

/// Runs one identity check.
pub fn verify_identity(id: IdentityId, params: &Params) -> Result<CheckResult> {
    use IdentityId::*;
    let started = Instant::now();
    let name = id.as_str();
    match id {
        Eq1_7 => {
            let n = u64_param(id, params, "n", 1)?;
            let sum = cache::ds_prefix(n);
            let rhs = big_w_poly(n).compose(cache::x_x1());
            match sum.div_exact_scalar(&BigInt::from(n)) {
                Ok(lhs) => Ok(result(id, params, lhs == rhs, sides(&lhs, &rhs), started)),
                Err(_) => Ok(result(
                    id,
                    params,
                    false,
                    format!("sum {sum} is not divisible by n = {n}"),
                    started,
                )),
            }
        }
        Eq1_11Int => {
            let n = u64_param(id, params, "n", 1)?;
            let two = BigInt::from(2);
            let d = sequences::delannoy_values(&BigInt::one(), n as usize);
            let s = sequences::little_schroder_values(&BigInt::one(), n as usize);
            let sum: BigInt = d.iter().zip(&s).map(|(a, b)| a * b).sum();
            let cat = catalan_table(n as usize);
            let mut pow2 = BigInt::one();
            let mut rhs = BigInt::zero();
            for (k, w) in w_row(n).into_iter().enumerate() {
                rhs += w * &cat[k] * &pow2;
                pow2 *= &two;
            }
            let (q, r) = sum.div_rem(&BigInt::from(n));
            let ok = r.is_zero() && q == rhs && rhs.is_odd();
            Ok(result(id, params, ok, format!("{}; odd = {}", sides(ri(sum) / ri(n), &rhs), rhs.is_odd()), started))
        }
        Eq1_13 => {
            let n = u64_param(id, params, "n", 1)?;
            let a = |n: u64| -> Rational {
                let cat = catalan_table(n as usize);
                (1..=n)
                    .map(|k| {
                        let num = binomial(n, k as i64) * binomial(n + k, k as i64 - 1) * &cat[k as usize - 1];
                        Rational::new(num, BigInt::from(-4).pow(k as u32 - 1))
                    })
                    .fold(Rational::zero(), |x, y| x + y)
            };
            let scale = BigInt::from(4).pow(n as u32 - 1);
            let an = a(n);
            let lhs = &an * ri(scale.clone());
            let rhs = BigInt::from((n + 1) / 2) * binomial(n, (n / 2) as i64).pow(2);
            let mut ok = lhs == ri(rhs.clone());
            let mut witness = format!("4^(n-1)-scaled: {}", sides(&lhs, &rhs));
            if n <= 100 {
                let (a1, a2) = (a(n + 1), a(n + 2));
                let rec = ri((n + 1) * (n + 1)) * &an + ri(2 * n + 3) * &a1 - ri((n + 1) * (n + 3)) * &a2;
                ok &= rec.is_zero();
                witness.push_str(&format!("; second-order recurrence residual = {rec}"));
            }
            Ok(result(id, params, ok, witness, started))
        }
        EqCor12Aux => {
            let m = u64_param(id, params, "m", 0)?;
            let lhs = (0..=m)
                .map(|j| {
                    Rational::new(
                        binomial(2 * j, j as i64).pow(2),
                        BigInt::from(j + 1) * BigInt::from(16).pow(j as u32),
                    )
                })
                .fold(Rational::zero(), |x, y| x + y);
            let rhs = Rational::new(
                BigInt::from((2 * m + 1) * (2 * m + 1)) * binomial(2 * m, m as i64).pow(2),
                BigInt::from(m + 1) * BigInt::from(16).pow(m as u32),
            );
            Ok(result(id, params, lhs == rhs, sides(&lhs, &rhs), started))
        }
        Eq1_2Cross => {
            let n = u64_param(id, params, "n", 0)?;
            let a: BigInt = (0..=n).map(|k| binomial(n, k as i64) * binomial(n + k, k as i64)).sum();
            let b: BigInt = (0..=n)
                .map(|k| binomial(n + k, 2 * k as i64) * binomial(2 * k, k as i64))
                .sum();
            let c = delannoy_general(n, n);
            let d = delannoy_poly_squares(n).eval_i64(1);
            let ok = a == b && b == c && c == d;
            Ok(result(
                id,
                params,
                ok,
                format!("sum forms {a}, {b}; D_(n,n) = {c}; D_n(1) = {d}"),
                started,
            ))
        }
        Eq2_2 => {
            let n = u64_param(id, params, "n", 0)?;
            let lhs = delannoy_poly_squares(n);
            let rhs = delannoy_poly_binomial(n);
            Ok(result(id, params, lhs == rhs, sides(&lhs, &rhs), started))
        }
        Eq2_3 => {
            let n = u64_param(id, params, "n", 1)?;
            let lhs = &delannoy_poly_binomial(n + 1) - &delannoy_poly_binomial(n - 1);
            let rhs = schroder_large_poly(n).shift(1).scale_i64(2 * (2 * n as i64 + 1));
            Ok(result(id, params, lhs == rhs, sides(&lhs, &rhs), started))
        }
        Eq2_4 => {
            let n = u64_param(id, params, "n", 1)?;
            let lhs = &IntPolynomial::linear(1, 1) * &schroder_little_poly(n);
            let rhs = schroder_large_poly(n);
            Ok(result(id, params, lhs == rhs, sides(&lhs, &rhs), started))
        }
        Eq2_5 => {
            let n = u64_param(id, params, "n", 1)?;
            let s = schroder_large_poly(n);
            let lhs = (&s * &s).scale(&BigInt::from(n * (n + 1)));
            let mut coeffs = vec![BigInt::zero(); n as usize];
            for k in 1..=n {
                coeffs[k as usize - 1] = binomial(n + k, 2 * k as i64)
                    * binomial(2 * k, k as i64)
                    * binomial(2 * k, k as i64 + 1);
            }
            let x1 = IntPolynomial::linear(1, 1);
            let rhs = &in_x_x1(coeffs) * &(&x1 * &x1);
            Ok(result(id, params, lhs == rhs, sides(&lhs, &rhs), started))
        }
        Eq2_6 => {
            let n = u64_param(id, params, "n", 1)?;
            let dsum = &delannoy_poly_binomial(n - 1) + &delannoy_poly_binomial(n + 1);
            let lhs = (&dsum * &schroder_large_poly_alt(n))
                .to_rational()
                .scale(&Rational::new(BigInt::one(), BigInt::from(2)));
            let coeffs: Vec<Rational> = (0..=n)
                .map(|k| {
                    Rational::new(
                        binomial(n + k, 2 * k as i64) * binomial(2 * k, k as i64).pow(2) * (2 * k + 1),
                        BigInt::from((k + 1) * (k + 1)),
                    )
                })
                .collect();
            let rhs = &rat_compose(&RatPolynomial::new(coeffs), cache::x_x1())
                * &IntPolynomial::linear(1, 1).to_rational();
            Ok(result(id, params, lhs == rhs, sides(&lhs, &rhs), started))
        }
        Eq2_7 => {
            let m = u64_param(id, params, "m", 1)?;
            let n = u64_param(id, params, "n", 1)?;
            if m > n {
                return Err(Error::PredicateViolated {
                    id: name.into(),
                    reason: format!("m = {m} exceeds n = {n}"),
                });
            }
            let lhs = (m..=n)
                .map(|k| ri(binomial(k + m, 2 * m as i64)) * bracket(m, k))
                .fold(Rational::zero(), |a, b| a + b);
            let rhs = Rational::new(
                BigInt::from((n - m) * (n + m + 1)) * binomial(n + m, 2 * m as i64),
                BigInt::from(n + 1),
            );
            Ok(result(id, params, lhs == rhs, sides(&lhs, &rhs), started))
        }
        Eq2_11 => {
            let k = u64_param(id, params, "k", 1)?;
            let lhs = (&delannoy_poly_binomial(k - 1) * &schroder_little_poly(k)).to_rational();
            let cat = catalan_table(k as usize + 1);
            let coeffs: Vec<Rational> = (0..=k)
                .map(|j| ri(binomial(k + j, 2 * j as i64) * cat[j as usize].pow(2)) * bracket(j, k))
                .collect();
            let rhs = rat_compose(&RatPolynomial::new(coeffs), cache::x_x1());
            Ok(result(id, params, lhs == rhs, sides(&lhs, &rhs), started))
        }
        Eq3_5And6 => {
            let n = u64_param(id, params, "n", 0)?;
            let two_x1 = IntPolynomial::linear(2, 1);
            let cat = catalan_table(n as usize / 2 + 1);
            let mut t = IntPolynomial::zero();
            let mut m = IntPolynomial::zero();
            for k in 0..=n / 2 {
                let base = &two_x1.pow((n - 2 * k) as u32) * &cache::x_x1().pow(k as u32);
                let c = binomial(n, 2 * k as i64);
                t += &base.scale(&(&c * binomial(2 * k, k as i64)));
                m += &base.scale(&(&c * &cat[k as usize]));
            }
            let d = delannoy_poly_squares(n);
            let s = schroder_little_poly(n + 1);
            let ok = t == d && m == s;
            Ok(result(
                id,
                params,
                ok,
                format!("D: {}; s: {}", sides(&t, &d), sides(&m, &s)),
                started,
            ))
        }
        Eq3_3Square => {
            let n = u64_param(id, params, "n", 0)?;
            let b = param(name, params, "b")?;
            let c = param(name, params, "c")?;
            let d = b * b - 4 * c;
            let Some(e) = square_root(d).filter(|&e| e > 0) else {
                return Ok(CheckResult::new(Suite::Identities, name, params.clone(), Status::Skip)
                    .with_witness(format!("d = {d} is not a positive square"))
                    .with_elapsed(started.elapsed()));
            };
            let x = Rational::new(BigInt::from(b - e), BigInt::from(2 * e));
            let scale = ri(BigInt::from(e).pow(n as u32));
            let t = sequences::trinomial_t(n, &BigInt::from(b), &BigInt::from(c));
            let m = sequences::motzkin_m(n, &BigInt::from(b), &BigInt::from(c));
            let td = &scale * delannoy_poly_squares(n).eval_rational(&x);
            let ms = &scale * schroder_little_poly(n + 1).eval_rational(&x);
            let ok = ri(t.clone()) == td && ri(m.clone()) == ms;
            Ok(result(
                id,
                params,
                ok,
                format!("sqrt d = {e}, x = {x}; T: {}; M: {}", sides(&t, &td), sides(&m, &ms)),
                started,
            ))
        }
        Eq3_7 => {
            let n = u64_param(id, params, "n", 1)?;
            let b = BigInt::from(param(name, params, "b")?);
            let c = BigInt::from(param(name, params, "c")?);
            let d = &b * &b - 4u32 * &c;
            let (lhs, rhs) = weighted_sides(n, &b, &c, |k| d.pow((n - 1 - k) as u32), |k| {
                c.pow(k as u32 - 1) * d.pow((n - k) as u32)
            });
            let ok = lhs == ri(rhs.clone());
            Ok(result(id, params, ok, format!("d = {d}; {}", sides(&lhs, &rhs)), started))
        }
        Eq3_12To18 => {
            let n = u64_param(id, params, "n", 1)?;
            let mut parts = Vec::new();
            let mut ok = true;
            let minus3 = BigInt::from(-3);
            let five = BigInt::from(5);
            let sign = |k: u64| if k % 2 == 1 { BigInt::one() } else { -BigInt::one() };
            type Weight<'a, T> = Box<dyn Fn(u64) -> T + 'a>;
            let cases: [(&str, i64, i64, Weight<Rational>, Weight<BigInt>); 4] = [
                (
                    "b=1,c=1",
                    1,
                    1,
                    Box::new(|k| ri(minus3.pow((n - 1 - k) as u32))),
                    Box::new(|k| minus3.pow((n - k) as u32)),
                ),
                (
                    "b=3,c=3",
                    3,
                    3,
                    Box::new(|k| Rational::new(BigInt::one(), minus3.pow(k as u32))),
                    Box::new(sign),
                ),
                (
                    "b=1,c=-1",
                    1,
                    -1,
                    Box::new(|k| ri(five.pow((n - 1 - k) as u32))),
                    Box::new(|k| sign(k) * five.pow((n - k) as u32)),
                ),
                (
                    "b=5,c=5",
                    5,
                    5,
                    Box::new(|k| Rational::new(BigInt::one(), five.pow(k as u32))),
                    Box::new(|_| BigInt::one()),
                ),
            ];
            for (label, b, c, lw, rw) in cases.iter() {
                let (lhs, rhs) = weighted_sides_rat(n, &BigInt::from(*b), &BigInt::from(*c), lw.as_ref(), rw.as_ref());
                let good = lhs == ri(rhs.clone());
                ok &= good;
                parts.push(format!("{label} {}", if good { "ok" } else { "FAILED" }));
                if !good {
                    parts.push(sides(&lhs, &rhs));
                }
            }
            Ok(result(id, params, ok, parts.join("; "), started))
        }
        Eq4_1 => {
            let n = u64_param(id, params, "n", 1)? as i64;
            let w: Vec<IntPolynomial> = (0..4).map(|i| big_w_poly((n + i) as u64)).collect();
            let lhs = w[3].scale_i64((n + 3) * (n + 3) * (n + 4) * (2 * n + 3));
            let a2 = IntPolynomial::linear(4 * (2 * n + 3) * (2 * n + 3), 3 * n * n + 11 * n + 10)
                .scale_i64((n + 3) * (2 * n + 5));
            let a1 = IntPolynomial::linear(4 * (2 * n + 5) * (2 * n + 5), 3 * n * n + 13 * n + 14)
                .scale_i64((n + 1) * (2 * n + 3));
            let rhs = &(&(&a2 * &w[2]) - &(&a1 * &w[1])) + &w[0].scale_i64(n * (n + 1) * (n + 1) * (2 * n + 5));
            Ok(result(id, params, lhs == rhs, sides(&lhs, &rhs), started))
        }
        Eq4_4 => {
            let m = u64_param(id, params, "m", 1)?;
            let n = u64_param(id, params, "n", 1)?;
            if m > n {
                return Err(Error::PredicateViolated {
                    id: name.into(),
                    reason: format!("m = {m} exceeds n = {n}"),
                });
            }
            let lhs: BigInt = (m..=n)
                .map(|k| {
                    let t = binomial(k - 1, m as i64 - 1) * w_coeff(n, k as i64);
                    if (n - k) % 2 == 0 {
                        t
                    } else {
                        -t
                    }
                })
                .sum();
            let rhs = w_coeff(n, m as i64);
            Ok(result(id, params, lhs == rhs, sides(&lhs, &rhs), started))
        }
        Eq4_5 => {
            let n = u64_param(id, params, "n", 1)? as i64;
            let lhs = small_w_poly(n as u64 + 2).scale_i64(n + 3);
            let rhs = &(&IntPolynomial::linear(2, 1) * &small_w_poly(n as u64 + 1)).scale_i64(2 * n + 3)
                - &small_w_poly(n as u64).scale_i64(n);
            Ok(result(id, params, lhs == rhs, sides(&lhs, &rhs), started))
        }
        Eq4_6 => {
            let order = param_at_least(name, params, "N", 0)? as usize;
            let mut r = series_gf_check(order);
            r.params = params.clone();
            Ok(r)
        }
        EqS2S => {
            let n = u64_param(id, params, "n", 1)?;
            let mut pow2 = BigInt::one();
            let mut s = BigInt::zero();
            for k in 1..=n {
                s += narayana(n, k as i64) * &pow2;
                pow2 <<= 1;
            }
            let big: BigInt = (0..=n)
                .map(|k| binomial(n + k, 2 * k as i64) * catalan(k))
                .sum();
            let alt: Rational = (0..=n)
                .map(|k| Rational::new(binomial(n, k as i64) * binomial(n + k, k as i64), BigInt::from(k + 1)))
                .fold(Rational::zero(), |a, b| a + b);
            let ok = big == 2u32 * &s && ri(big.clone()) == alt;
            Ok(result(id, params, ok, format!("S_n = {big}, {alt}; 2 s_n = {}", 2u32 * &s), started))
        }
        EqL25Rec => {
            let p = u64_param(id, params, "p", 3)?;
            let j = u64_param(id, params, "j", 0)?;
            if !is_prime(p) || p % 2 == 0 {
                return Err(Error::PredicateViolated {
                    id: name.into(),
                    reason: format!("p = {p} is not an odd prime"),
                });
            }
            if j >= p {
                return Err(Error::PredicateViolated {
                    id: name.into(),
                    reason: format!("j = {j} must be below p = {p}"),
                });
            }
            let lhs = ri(j + 2) * u_lemma25(j, p) + ri(2 * (2 * j + 1)) * u_lemma25(j + 1, p);
            let rhs = Rational::new(
                f_lemma25(p, j) * binomial(p + j, 2 * j as i64),
                BigInt::from(2 * (j + 1) * (j + 2) * (2 * j + 3)),
            );
            let ok = lhs == rhs;
            let den = lhs.denom().lcm(rhs.denom());
            let scaled = |q: &Rational| q * ri(den.clone());
            Ok(result(
                id,
                params,
                ok,
                format!("scaled by {den}: {}", sides(scaled(&lhs), scaled(&rhs))),
                started,
            ))
        }
    }
}

/// `(1/n) sum_{k<n} T_k M_k * left(k)` and `sum_{k=1..n} w(n,k) C_{k-1} * right(k)`.
fn weighted_sides(
    n: u64,
    b: &BigInt,
    c: &BigInt,
    left: impl Fn(u64) -> BigInt,
    right: impl Fn(u64) -> BigInt,
) -> (Rational, BigInt) {
    weighted_sides_rat(n, b, c, &|k| ri(left(k)), &right)
}

fn weighted_sides_rat(
    n: u64,
    b: &BigInt,
    c: &BigInt,
    left: &dyn Fn(u64) -> Rational,
    right: &dyn Fn(u64) -> BigInt,
) -> (Rational, BigInt) {
    let t = trinomial_values(b, c, n as usize);
    let m = motzkin_values(b, c, n as usize);
    let sum = (0..n)
        .map(|k| ri(&t[k as usize] * &m[k as usize]) * left(k))
        .fold(Rational::zero(), |a, b| a + b);
    let lhs = sum / ri(n);
    let cat = catalan_table(n as usize);
    let rhs = w_row(n)
        .into_iter()
        .enumerate()
        .map(|(i, w)| w * &cat[i] * right(i as u64 + 1))
        .sum();
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(id: IdentityId, pairs: &[(&str, i64)]) -> CheckResult {
        verify_identity(id, &params_of(pairs)).unwrap()
    }

    #[test]
    fn catalog_shape() {
        let list = list_identities();
        assert_eq!(list.len(), 22);
        let ids: Vec<&str> = list.iter().map(|e| e.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
        let e17 = list.iter().find(|e| e.id == "EQ_1_7").unwrap();
        assert_eq!(e17.reference, "Theorem 1.1(i)");
        assert_eq!("EQ_2_7".parse::<IdentityId>().unwrap(), IdentityId::Eq2_7);
        assert_eq!(
            "EQ_9_9".parse::<IdentityId>().unwrap_err(),
            Error::UnknownId("EQ_9_9".into())
        );
    }

    #[test]
    fn worked_examples() {
        let r = run(IdentityId::Eq1_7, &[("n", 2)]);
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.contains("lhs = 2x^2 + 2x + 1; rhs = 2x^2 + 2x + 1"), "{}", r.witness);
        let r = run(IdentityId::Eq2_7, &[("m", 1), ("n", 2)]);
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.contains("lhs = 4; rhs = 4"), "{}", r.witness);
        let r = run(IdentityId::Eq1_13, &[("n", 2)]);
        assert_eq!(r.status, Status::Pass);
        assert!(r.witness.contains("lhs = 4; rhs = 4"), "{}", r.witness);
    }

    #[test]
    fn missing_and_bad_params() {
        assert_eq!(
            verify_identity(IdentityId::Eq1_7, &Params::new()).unwrap_err(),
            Error::MissingParam {
                id: "EQ_1_7".into(),
                param: "n".into()
            }
        );
        assert!(matches!(
            verify_identity(IdentityId::Eq2_7, &params_of(&[("m", 3), ("n", 2)])),
            Err(Error::PredicateViolated { .. })
        ));
        let r = run(IdentityId::Eq3_3Square, &[("n", 3), ("b", 1), ("c", 1)]);
        assert_eq!(r.status, Status::Skip);
    }

    #[test]
    fn every_entry_passes_on_small_cells() {
        let b = CellBounds {
            n_max: Some(12),
            ..CellBounds::default()
        };
        for &id in IdentityId::ALL {
            let cells = identity_cells(id, &b);
            assert!(!cells.is_empty(), "{id}");
            for cell in cells {
                let r = verify_identity(id, &cell).unwrap();
                assert_eq!(r.status, Status::Pass, "{id} {:?}: {}", cell, r.witness);
            }
        }
    }

    #[test]
    fn square_helper() {
        assert_eq!(square_root(9), Some(3));
        assert_eq!(square_root(0), Some(0));
        assert_eq!(square_root(-4), None);
        assert_eq!(square_root(8), None);
    }
}
