//! Second routes to the families: holonomic recurrences, lattice tables and
//! running sums. None of these call the defining sums.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{binomial, Rational};
use crate::poly::{IntPolynomial, RatPolynomial};

use super::{f_lemma25, r_poly_alt};

/// Runs `lead(n) a_{n+2} = c0(n) a_n + c1(n) a_{n+1}` from `a_0, a_1`,
/// asserting every division is exact.
pub fn order_two_values<F>(count: usize, a0: BigInt, a1: BigInt, step: F) -> Vec<BigInt>
where
    F: Fn(u64) -> (BigInt, BigInt, BigInt),
{
    let mut out = Vec::with_capacity(count);
    out.push(a0);
    out.push(a1);
    for n in 0..count.saturating_sub(2) as u64 {
        let (lead, c0, c1) = step(n);
        let i = n as usize;
        let num = c0 * &out[i] + c1 * &out[i + 1];
        let (q, r) = num.div_rem(&lead);
        assert!(r.is_zero(), "recurrence division by {lead} is not exact at n = {n}");
        out.push(q);
    }
    out.truncate(count);
    out
}

fn div_exact(p: IntPolynomial, d: u64, what: &str, n: u64) -> IntPolynomial {
    p.div_exact_scalar(&BigInt::from(d))
        .unwrap_or_else(|_| panic!("{what} recurrence is not integral at n = {n}"))
}

/// `D_0 .. D_{count-1}` from `(n+2)D_{n+2} = (2x+1)(2n+3)D_{n+1} - (n+1)D_n`.
pub fn delannoy(count: usize) -> Vec<IntPolynomial> {
    let two_x1 = IntPolynomial::linear(2, 1);
    let mut out = vec![IntPolynomial::one(), two_x1.clone()];
    for n in 0..count.saturating_sub(2) as u64 {
        let i = n as usize;
        let next = &(&two_x1 * &out[i + 1]).scale_i64(2 * n as i64 + 3) - &out[i].scale_i64(n as i64 + 1);
        out.push(div_exact(next, n + 2, "D", n));
    }
    out.truncate(count);
    out
}

/// `s_1 .. s_count` from `(n+4)v_{n+2} = (2x+1)(2n+5)v_{n+1} - (n+1)v_n`,
/// `v_n = s_{n+1}`.
pub fn little_schroder(count: usize) -> Vec<IntPolynomial> {
    let two_x1 = IntPolynomial::linear(2, 1);
    let mut out = vec![IntPolynomial::one(), two_x1.clone()];
    for n in 0..count.saturating_sub(2) as u64 {
        let i = n as usize;
        let next = &(&two_x1 * &out[i + 1]).scale_i64(2 * n as i64 + 5) - &out[i].scale_i64(n as i64 + 1);
        out.push(div_exact(next, n + 4, "s", n));
    }
    out.truncate(count);
    out
}

/// `W_1 .. W_count` from the order-three recurrence seeded with
/// `W_1 = 1`, `W_2 = 2x + 1`, `W_3 = 10x^2 + 5x + 1`.
pub fn big_w(count: usize) -> Vec<IntPolynomial> {
    let mut out = vec![
        IntPolynomial::one(),
        IntPolynomial::from_i64s(&[1, 2]),
        IntPolynomial::from_i64s(&[1, 5, 10]),
    ];
    for n in 1..=count.saturating_sub(3) as i64 {
        let i = n as usize - 1;
        let a2 = IntPolynomial::linear(4 * (2 * n + 3) * (2 * n + 3), 3 * n * n + 11 * n + 10)
            .scale_i64((n + 3) * (2 * n + 5));
        let a1 = IntPolynomial::linear(4 * (2 * n + 5) * (2 * n + 5), 3 * n * n + 13 * n + 14)
            .scale_i64((n + 1) * (2 * n + 3));
        let a0 = n * (n + 1) * (n + 1) * (2 * n + 5);
        let next = &(&(&a2 * &out[i + 2]) - &(&a1 * &out[i + 1])) + &out[i].scale_i64(a0);
        let lead = ((n + 3) * (n + 3) * (n + 4) * (2 * n + 3)) as u64;
        out.push(div_exact(next, lead, "W", n as u64));
    }
    out.truncate(count);
    out
}

/// `w_1 .. w_count` from `(n+3)w_{n+2} = (2x+1)(2n+3)w_{n+1} - n w_n`.
pub fn small_w(count: usize) -> Vec<IntPolynomial> {
    let two_x1 = IntPolynomial::linear(2, 1);
    let mut out = vec![IntPolynomial::one(), two_x1.clone()];
    for n in 1..=count.saturating_sub(2) as u64 {
        let i = n as usize - 1;
        let next = &(&two_x1 * &out[i + 1]).scale_i64(2 * n as i64 + 3) - &out[i].scale_i64(n as i64);
        out.push(div_exact(next, n + 3, "w", n));
    }
    out.truncate(count);
    out
}

/// `table[m][n] = D_{m,n}` for `m, n < size`, from the lattice-path
/// recurrence `D_{m,n} = D_{m-1,n} + D_{m,n-1} + D_{m-1,n-1}`.
pub fn delannoy_general_table(size: usize) -> Vec<Vec<BigInt>> {
    let mut t = vec![vec![BigInt::one(); size]; size];
    for m in 1..size {
        for n in 1..size {
            t[m][n] = &t[m - 1][n] + &t[m][n - 1] + &t[m - 1][n - 1];
        }
    }
    t
}

/// `u_0 .. u_p` run backwards from `u_p = 0` through
/// `(j+2)u_j + 2(2j+1)u_{j+1} = f(p,j) C(p+j,2j) / (2(j+1)(j+2)(2j+3))`.
pub fn lemma_u_backward(p: u64) -> Vec<Rational> {
    let mut u = vec![Rational::zero(); p as usize + 1];
    for j in (0..p).rev() {
        let rhs = Rational::new(
            f_lemma25(p, j) * binomial(p + j, 2 * j as i64),
            BigInt::from(2 * (j + 1) * (j + 2) * (2 * j + 3)),
        );
        let next = &u[j as usize + 1];
        u[j as usize] = (rhs - next * Rational::from_integer(BigInt::from(2 * (2 * j + 1))))
            / Rational::from_integer(BigInt::from(j + 2));
    }
    u
}

/// `f_1 .. f_count` from running sums of `D_k R_k`, with `D_k` from its
/// recurrence and `R_k` from its second sum form.
pub fn f_running(count: usize) -> Vec<RatPolynomial> {
    let ds = delannoy(count);
    let mut acc = RatPolynomial::zero();
    let mut out = Vec::with_capacity(count);
    for (k, d) in ds.iter().enumerate() {
        acc += &(&d.to_rational() * &r_poly_alt(k as u64));
        out.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(k + 1))));
    }
    out
}
