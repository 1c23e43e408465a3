//! Generators for the Delannoy/Schröder polynomial families and their
//! companions.
//!
//! Functions in this module follow the defining sums. The [`recurrence`]
//! submodule holds the independent holonomic recurrences; [`stream`] runs
//! those recurrences modulo prime powers.

pub mod cache;
pub mod recurrence;
pub mod stream;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{binomial, catalan_table, narayana, Rational};
use crate::poly::{IntPolynomial, RatPolynomial};

pub use stream::{mod_stream, ModStream};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SequenceFamily {
    /// `D_n(x)`
    DelannoyPoly,
    /// `s_n(x)`
    LittleSchroderPoly,
    /// `S_n(x)`
    LargeSchroderPoly,
    /// `W_n(x)`
    BigW,
    /// `w_n(x)`
    SmallW,
    /// `T_n(b, c)`
    TrinomialT { b: i64, c: i64 },
    /// `M_n(b, c)`
    MotzkinM { b: i64, c: i64 },
    /// `R_k(x)`
    RPoly,
    /// `f_n(x)`
    FPoly,
    /// `D_{m,n}`
    DelannoyGeneral,
    /// `u_j` attached to an odd prime `p`
    LemmaU { p: u64 },
}

impl SequenceFamily {
    pub fn name(&self) -> String {
        match self {
            Self::DelannoyPoly => "DelannoyPoly".into(),
            Self::LittleSchroderPoly => "LittleSchroderPoly".into(),
            Self::LargeSchroderPoly => "LargeSchroderPoly".into(),
            Self::BigW => "BigW".into(),
            Self::SmallW => "SmallW".into(),
            Self::TrinomialT { b, c } => format!("TrinomialT({b},{c})"),
            Self::MotzkinM { b, c } => format!("MotzkinM({b},{c})"),
            Self::RPoly => "RPoly".into(),
            Self::FPoly => "FPoly".into(),
            Self::DelannoyGeneral => "DelannoyGeneral".into(),
            Self::LemmaU { p } => format!("LemmaU({p})"),
        }
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Rows `0..=n` of Pascal's triangle.
fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = vec![BigInt::one(); i + 1];
        for j in 1..i {
            row[j] = &rows[i - 1][j - 1] + &rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}

/// `D_n(x) = sum_k C(n,k)^2 x^k (x+1)^(n-k)`.
pub fn delannoy_poly_squares(n: u64) -> IntPolynomial {
    let n = n as usize;
    let tri = pascal(n);
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for k in 0..=n {
        let sq = &tri[n][k] * &tri[n][k];
        // x^k (x+1)^(n-k) contributes C(n-k, m-k) to x^m.
        for (j, b) in tri[n - k].iter().enumerate() {
            coeffs[k + j] += &sq * b;
        }
    }
    IntPolynomial::new(coeffs)
}

/// `D_n(x) = sum_k C(n,k) C(n+k,k) x^k`.
pub fn delannoy_poly_binomial(n: u64) -> IntPolynomial {
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    for k in 0..=n {
        coeffs.push(c.clone());
        c = c * (n - k) * (n + k + 1) / ((k + 1) * (k + 1));
    }
    IntPolynomial::new(coeffs)
}

/// `D_n(x)`, built from both sum forms, which must agree.
pub fn delannoy_poly(n: u64) -> IntPolynomial {
    let a = delannoy_poly_squares(n);
    let b = delannoy_poly_binomial(n);
    if a != b {
        panic!(
            "D_{n}(x) disagrees between its two sum forms at x^{}",
            a.first_difference(&b).unwrap_or(0)
        );
    }
    a
}

/// `s_n(x) = sum_{k=1..n} N(n,k) x^(k-1) (x+1)^(n-k)` for `n >= 1`.
pub fn schroder_little_poly(n: u64) -> IntPolynomial {
    assert!(n >= 1, "s_n is defined for n >= 1");
    let nu = n as usize;
    let tri = pascal(nu);
    let mut coeffs = vec![BigInt::zero(); nu];
    for k in 1..=nu {
        let nk = narayana(n, k as i64);
        for (j, b) in tri[nu - k].iter().enumerate() {
            coeffs[k - 1 + j] += &nk * b;
        }
    }
    IntPolynomial::new(coeffs)
}

/// `S_n(x) = sum_k C(n+k, 2k) C_k x^k`.
pub fn schroder_large_poly(n: u64) -> IntPolynomial {
    let cat = catalan_table(n as usize + 1);
    IntPolynomial::new(
        (0..=n)
            .map(|k| binomial(n + k, 2 * k as i64) * &cat[k as usize])
            .collect(),
    )
}

/// `S_n(x) = sum_k C(n,k) C(n+k,k) x^k / (k+1)`, each division exact.
pub fn schroder_large_poly_alt(n: u64) -> IntPolynomial {
    IntPolynomial::new(
        (0..=n)
            .map(|k| {
                let (q, r) = (binomial(n, k as i64) * binomial(n + k, k as i64)).div_rem(&BigInt::from(k + 1));
                assert!(r.is_zero(), "S_{n}: coefficient {k} is not integral");
                q
            })
            .collect(),
    )
}

/// `w(n,k) = C(n-1,k-1) C(n+k,k-1) / k`; zero outside `1 <= k <= n`.
pub fn w_coeff(n: u64, k: i64) -> BigInt {
    assert!(n >= 1, "w(n,k) is defined for n >= 1");
    if k < 1 || k as u64 > n {
        return BigInt::zero();
    }
    let num = binomial(n - 1, k - 1) * binomial(n + k as u64, k - 1);
    let (q, r) = num.div_rem(&BigInt::from(k));
    assert!(r.is_zero(), "w({n},{k}) is not integral");
    q
}

/// `[w(n,1), ..., w(n,n)]` via `w(n,k+1) = w(n,k) (n-k)(n+k+1) / (k(k+1))`.
pub fn w_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize);
    let mut w = BigInt::one();
    for k in 1..=n {
        row.push(w.clone());
        w = w * (n - k) * (n + k + 1) / (k * (k + 1));
    }
    row
}

/// `W_n(x) = sum_{k=1..n} w(n,k) C_{k-1} x^(k-1)`.
pub fn big_w_poly(n: u64) -> IntPolynomial {
    assert!(n >= 1, "W_n is defined for n >= 1");
    let cat = catalan_table(n as usize);
    IntPolynomial::new(w_row(n).into_iter().zip(cat).map(|(w, c)| w * c).collect())
}

/// `w_n(x) = sum_{k=1..n} w(n,k) x^(k-1)`.
pub fn small_w_poly(n: u64) -> IntPolynomial {
    assert!(n >= 1, "w_n is defined for n >= 1");
    IntPolynomial::new(w_row(n))
}

/// Multinomial `n! / ((n-2k)! k! k!) = C(n,2k) C(2k,k)` for `k = 0..=n/2`.
fn central_multinomials(n: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(n as usize / 2 + 1);
    let mut m = BigInt::one();
    for k in 0..=n / 2 {
        out.push(m.clone());
        if 2 * k + 2 <= n {
            m = m * (n - 2 * k) * (n - 2 * k - 1) / ((k + 1) * (k + 1));
        }
    }
    out
}

fn powers(base: &BigInt, max: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(max + 1);
    let mut acc = BigInt::one();
    for _ in 0..=max {
        out.push(acc.clone());
        acc *= base;
    }
    out
}

/// `T_n(b,c) = sum_k C(n,2k) C(2k,k) b^(n-2k) c^k`.
pub fn trinomial_t(n: u64, b: &BigInt, c: &BigInt) -> BigInt {
    let bp = powers(b, n as usize);
    let cp = powers(c, n as usize / 2);
    central_multinomials(n)
        .into_iter()
        .enumerate()
        .map(|(k, m)| m * &bp[n as usize - 2 * k] * &cp[k])
        .sum()
}

/// `[x^n] (x^2 + b x + c)^n`.
pub fn trinomial_t_extract(n: u64, b: &BigInt, c: &BigInt) -> BigInt {
    let quad = IntPolynomial::new(vec![c.clone(), b.clone(), BigInt::one()]);
    quad.pow(n as u32).coeff(n as usize)
}

/// `M_n(b,c) = sum_k C(n,2k) C_k b^(n-2k) c^k`.
pub fn motzkin_m(n: u64, b: &BigInt, c: &BigInt) -> BigInt {
    let bp = powers(b, n as usize);
    let cp = powers(c, n as usize / 2);
    central_multinomials(n)
        .into_iter()
        .enumerate()
        .map(|(k, m)| m / (k as u64 + 1) * &bp[n as usize - 2 * k] * &cp[k])
        .sum()
}

/// `R_k(x) = sum_l C(k+l,2l) C(2l,l) x^l / (2l-1)`.
pub fn r_poly(k: u64) -> RatPolynomial {
    RatPolynomial::new(
        (0..=k)
            .map(|l| {
                let num = binomial(k + l, 2 * l as i64) * binomial(2 * l, l as i64);
                Rational::new(num, BigInt::from(2 * l as i64 - 1))
            })
            .collect(),
    )
}

/// `R_k(x) = sum_l C(k,l) C(k+l,l) x^l / (2l-1)`.
pub fn r_poly_alt(k: u64) -> RatPolynomial {
    RatPolynomial::new(
        (0..=k)
            .map(|l| {
                let num = binomial(k, l as i64) * binomial(k + l, l as i64);
                Rational::new(num, BigInt::from(2 * l as i64 - 1))
            })
            .collect(),
    )
}

/// `f_n(x) = (1/n) sum_{k<n} D_k(x) R_k(x)`; integrality is not assumed.
pub fn f_poly(n: u64) -> RatPolynomial {
    assert!(n >= 1, "f_n is defined for n >= 1");
    let mut acc = RatPolynomial::zero();
    for k in 0..n {
        acc += &(&delannoy_poly_binomial(k).to_rational() * &r_poly(k));
    }
    acc.scale(&Rational::new(BigInt::one(), BigInt::from(n)))
}

/// `D_{m,n} = sum_k C(m,k) C(n,k) 2^k`.
pub fn delannoy_general(m: u64, n: u64) -> BigInt {
    let mut pow2 = BigInt::one();
    let mut acc = BigInt::zero();
    for k in 0..=m.min(n) {
        acc += binomial(m, k as i64) * binomial(n, k as i64) * &pow2;
        pow2 <<= 1;
    }
    acc
}

/// The summand bracket `2j+1 - j(j+1)(2k+1)/(k(k+1))` shared by several
/// identities.
pub fn bracket(j: u64, k: u64) -> Rational {
    let j = BigInt::from(j);
    let k = BigInt::from(k);
    Rational::from_integer(2u32 * &j + 1u32)
        - Rational::new(&j * (&j + 1u32) * (2u32 * &k + 1u32), &k * (&k + 1u32))
}

/// `u_j = sum_{j<k<=p} (k-1) C(k+j,2j) (2j+1 - j(j+1)(2k+1)/(k(k+1)))`.
pub fn u_lemma25(j: u64, p: u64) -> Rational {
    assert!(j <= p, "u_j is defined for 0 <= j <= p");
    ((j + 1)..=p)
        .map(|k| {
            Rational::from_integer(BigInt::from(k - 1) * binomial(k + j, 2 * j as i64)) * bracket(j, k)
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// `f(p,j) = (p-j)(p+j+1)((2j+3)^2 p^2 - (2j^2+8j+7)p - (j+1)(j+2))`.
pub fn f_lemma25(p: u64, j: u64) -> BigInt {
    let p = BigInt::from(p);
    let j = BigInt::from(j);
    let a = &p - &j;
    let b = &p + &j + 1u32;
    let two_j3 = 2u32 * &j + 3u32;
    let c = &two_j3 * &two_j3 * &p * &p
        - (2u32 * &j * &j + 8u32 * &j + 7u32) * &p
        - (&j + 1u32) * (&j + 2u32);
    a * b * c
}

/// `D_n(x0)` for `n < count` via the three-term recurrence (integers only).
pub fn delannoy_values(x: &BigInt, count: usize) -> Vec<BigInt> {
    recurrence::order_two_values(count, BigInt::one(), 2u32 * x + 1u32, |n| {
        // (n+2) u_{n+2} = (2x+1)(2n+3) u_{n+1} - (n+1) u_n
        (
            BigInt::from(n + 2),
            BigInt::from(-(n as i64 + 1)),
            (2u32 * x + 1u32) * (2 * n + 3),
        )
    })
}

/// `s_{n+1}(x0)` for `n < count`, i.e. `s_1, s_2, ...`.
pub fn little_schroder_values(x: &BigInt, count: usize) -> Vec<BigInt> {
    recurrence::order_two_values(count, BigInt::one(), 2u32 * x + 1u32, |n| {
        // (n+4) v_{n+2} = (2x+1)(2n+5) v_{n+1} - (n+1) v_n
        (
            BigInt::from(n + 4),
            BigInt::from(-(n as i64 + 1)),
            (2u32 * x + 1u32) * (2 * n + 5),
        )
    })
}

/// `T_n(b,c)` for `n < count` via `(n+2)T_{n+2} = b(2n+3)T_{n+1} - (n+1) d T_n`.
pub fn trinomial_values(b: &BigInt, c: &BigInt, count: usize) -> Vec<BigInt> {
    let d = b * b - 4u32 * c;
    recurrence::order_two_values(count, BigInt::one(), b.clone(), |n| {
        (BigInt::from(n + 2), -(&d * (n + 1)), b * (2 * n + 3))
    })
}

/// `M_n(b,c)` for `n < count` via `(n+4)M_{n+2} = b(2n+5)M_{n+1} - (n+1) d M_n`.
pub fn motzkin_values(b: &BigInt, c: &BigInt, count: usize) -> Vec<BigInt> {
    let d = b * b - 4u32 * c;
    recurrence::order_two_values(count, BigInt::one(), b.clone(), |n| {
        (BigInt::from(n + 4), -(&d * (n + 1)), b * (2 * n + 5))
    })
}
