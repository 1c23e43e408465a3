//! Every family computed from its defining sum agrees with its recurrence
//! route, and both agree with coefficient formulas computed here from
//! factorials.

use delannoy_core::exact::{catalan_table, int};
use delannoy_core::sequences::{self, recurrence};
use delannoy_core::{IntPolynomial, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

const N: u64 = 200;

fn factorials(n: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::one()];
    for i in 1..=n {
        let next = &f[i - 1] * i;
        f.push(next);
    }
    f
}

struct Oracle {
    fact: Vec<BigInt>,
}

impl Oracle {
    fn new() -> Self {
        Oracle { fact: factorials(3 * N as usize + 4) }
    }

    fn choose(&self, n: u64, k: u64) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        let f = &self.fact;
        &f[n as usize] / (&f[k as usize] * &f[(n - k) as usize])
    }

    /// `[x^k] D_n = C(n,k) C(n+k,k)`.
    fn delannoy(&self, n: u64) -> IntPolynomial {
        IntPolynomial::new((0..=n).map(|k| self.choose(n, k) * self.choose(n + k, k)).collect())
    }

    /// `[x^(k-1)] w_n = C(n-1,k-1) C(n+k,k-1) / k`.
    fn small_w(&self, n: u64) -> IntPolynomial {
        IntPolynomial::new(
            (1..=n)
                .map(|k| self.choose(n - 1, k - 1) * self.choose(n + k, k - 1) / k)
                .collect(),
        )
    }
}

#[test]
fn delannoy_three_ways() {
    let o = Oracle::new();
    let rec = recurrence::delannoy(N as usize + 1);
    for n in 0..=N {
        let want = o.delannoy(n);
        assert_eq!(sequences::delannoy_poly_binomial(n), want, "binomial form, n={n}");
        assert_eq!(rec[n as usize], want, "recurrence, n={n}");
    }
    for n in (0..=N).step_by(7) {
        assert_eq!(sequences::delannoy_poly_squares(n), o.delannoy(n), "squares form, n={n}");
    }
}

#[test]
fn little_and_large_schroder() {
    let o = Oracle::new();
    let rec = recurrence::little_schroder(N as usize);
    let x1 = IntPolynomial::linear(1, 1);
    for n in 1..=N {
        let s = sequences::schroder_little_poly(n);
        assert_eq!(rec[n as usize - 1], s, "s_{n}");
        // S_n = sum C(n,k) C(n+k,k) x^k / (k+1) and S_n = (x+1) s_n.
        let large = IntPolynomial::new(
            (0..=n)
                .map(|k| o.choose(n, k) * o.choose(n + k, k) / (k + 1))
                .collect(),
        );
        assert_eq!(&x1 * &s, large, "S_{n} = (x+1) s_{n}");
        if n % 5 == 0 {
            assert_eq!(sequences::schroder_large_poly(n), large, "S_{n} Catalan form");
            assert_eq!(sequences::schroder_large_poly_alt(n), large, "S_{n} binomial form");
        }
    }
}

#[test]
fn w_families() {
    let o = Oracle::new();
    let big = recurrence::big_w(N as usize);
    let small = recurrence::small_w(N as usize);
    let cat = catalan_table(N as usize);
    for n in 1..=N {
        let w = o.small_w(n);
        assert_eq!(sequences::small_w_poly(n), w, "w_{n} definition");
        assert_eq!(small[n as usize - 1], w, "w_{n} recurrence");
        let bw = IntPolynomial::new(
            w.coeffs().iter().zip(&cat).map(|(a, c)| a * c).collect(),
        );
        assert_eq!(sequences::big_w_poly(n), bw, "W_{n} definition");
        assert_eq!(big[n as usize - 1], bw, "W_{n} recurrence");
    }
}

#[test]
fn printed_w_polynomials() {
    let printed = [
        IntPolynomial::from_i64s(&[1]),
        IntPolynomial::from_i64s(&[1, 2]),
        IntPolynomial::from_i64s(&[1, 5, 10]),
        IntPolynomial::from_i64s(&[1, 9, 42, 70]),
    ];
    for (i, want) in printed.iter().enumerate() {
        assert_eq!(&sequences::big_w_poly(i as u64 + 1), want);
    }
}

#[test]
fn trinomial_and_motzkin() {
    for (b, c) in [(1i64, 1i64), (3, 2), (-2, 5), (0, 3), (2, 1), (5, 5), (1, -1)] {
        let (bb, cc) = (int(b), int(c));
        let t = sequences::trinomial_values(&bb, &cc, N as usize + 1);
        let m = sequences::motzkin_values(&bb, &cc, N as usize + 1);
        for n in 0..=N {
            assert_eq!(sequences::trinomial_t(n, &bb, &cc), t[n as usize], "T_{n}({b},{c})");
            assert_eq!(sequences::motzkin_m(n, &bb, &cc), m[n as usize], "M_{n}({b},{c})");
        }
        for n in 0..=30 {
            assert_eq!(sequences::trinomial_t_extract(n, &bb, &cc), t[n as usize], "[x^n] T_{n}");
        }
    }
}

#[test]
fn integer_value_routes() {
    for x in -3i64..=3 {
        let x = int(x);
        let d = sequences::delannoy_values(&x, N as usize + 1);
        let s = sequences::little_schroder_values(&x, N as usize);
        for n in (0..=N).step_by(3) {
            assert_eq!(d[n as usize], sequences::cache::delannoy(n).eval(&x));
        }
        for n in (1..=N).step_by(3) {
            assert_eq!(s[n as usize - 1], sequences::cache::little_schroder(n).eval(&x));
        }
    }
}

#[test]
fn r_and_f_polynomials() {
    for k in 0..=N {
        assert_eq!(sequences::r_poly(k), sequences::r_poly_alt(k), "R_{k}");
    }
    let running = recurrence::f_running(60);
    for n in 1..=60u64 {
        assert_eq!(running[n as usize - 1], sequences::f_poly(n), "f_{n}");
    }
    assert_eq!(sequences::r_poly(0).coeff(0), Rational::from_integer(int(-1)));
}

#[test]
fn general_delannoy_lattice() {
    let table = recurrence::delannoy_general_table(81);
    for m in 0..=80u64 {
        for n in (0..=80u64).step_by(4) {
            assert_eq!(table[m as usize][n as usize], sequences::delannoy_general(m, n), "D_{{{m},{n}}}");
        }
    }
}

#[test]
fn lemma_u_both_directions() {
    for p in delannoy_core::exact::odd_primes_in(3, 59) {
        let back = recurrence::lemma_u_backward(p);
        for j in 0..=p {
            assert_eq!(back[j as usize], sequences::u_lemma25(j, p), "p={p} j={j}");
        }
    }
}
