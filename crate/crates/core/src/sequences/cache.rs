//! Process-wide tables of polynomials, extended on demand.

use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::Rational;
use crate::poly::{IntPolynomial, RatPolynomial};

use super::{delannoy_poly_binomial, r_poly_alt};

struct Table<T> {
    items: Mutex<Vec<T>>,
}

impl<T: Clone> Table<T> {
    const fn new() -> Self {
        Self {
            items: Mutex::new(Vec::new()),
        }
    }

    fn get(&self, n: usize, extend: impl Fn(&[T]) -> T) -> T {
        let mut items = self.items.lock().unwrap_or_else(|e| e.into_inner());
        while items.len() <= n {
            let next = extend(&items);
            items.push(next);
        }
        items[n].clone()
    }
}

static DELANNOY: Table<IntPolynomial> = Table::new();
static LITTLE: Table<IntPolynomial> = Table::new();
static DS_PREFIX: Table<IntPolynomial> = Table::new();
static DR_PREFIX: Table<RatPolynomial> = Table::new();
static X_X1: LazyLock<IntPolynomial> = LazyLock::new(|| IntPolynomial::from_i64s(&[0, 1, 1]));

/// `D_n(x)`.
pub fn delannoy(n: u64) -> IntPolynomial {
    DELANNOY.get(n as usize, |done| delannoy_poly_binomial(done.len() as u64))
}

/// `s_n(x)` for `n >= 1`; index 0 holds `s_0 = 0`.
pub fn little_schroder(n: u64) -> IntPolynomial {
    LITTLE.get(n as usize, |done| {
        let m = done.len() as u64;
        match m {
            0 => IntPolynomial::zero(),
            1 => IntPolynomial::one(),
            2 => IntPolynomial::linear(2, 1),
            _ => {
                // (m+1) s_m = (2x+1)(2m-1) s_{m-1} - (m-2) s_{m-2}
                let a = (&IntPolynomial::linear(2, 1) * &done[m as usize - 1]).scale_i64(2 * m as i64 - 1);
                let b = done[m as usize - 2].scale_i64(m as i64 - 2);
                (&a - &b)
                    .div_exact_scalar(&BigInt::from(m + 1))
                    .expect("s_n recurrence is integral")
            }
        }
    })
}

/// `S_n(x) = (x+1) s_n(x)` for `n >= 1`, `S_0 = 1`.
pub fn large_schroder(n: u64) -> IntPolynomial {
    if n == 0 {
        IntPolynomial::one()
    } else {
        &IntPolynomial::linear(1, 1) * &little_schroder(n)
    }
}

/// `sum_{k<n} D_k(x) s_{k+1}(x)`.
pub fn ds_prefix(n: u64) -> IntPolynomial {
    DS_PREFIX.get(n as usize, |done| match done.last() {
        None => IntPolynomial::zero(),
        Some(prev) => {
            let k = done.len() as u64 - 1;
            prev + &(&delannoy(k) * &little_schroder(k + 1))
        }
    })
}

/// `sum_{k<n} D_k(x) R_k(x)`.
pub fn dr_prefix(n: u64) -> RatPolynomial {
    DR_PREFIX.get(n as usize, |done| match done.last() {
        None => RatPolynomial::zero(),
        Some(prev) => {
            let k = done.len() as u64 - 1;
            prev + &(&delannoy(k).to_rational() * &r_poly_alt(k))
        }
    })
}

/// `f_n(x) = (1/n) sum_{k<n} D_k R_k`.
pub fn f_poly(n: u64) -> RatPolynomial {
    dr_prefix(n).scale(&Rational::new(BigInt::one(), BigInt::from(n)))
}

/// `x(x+1)`.
pub fn x_x1() -> &'static IntPolynomial {
    &X_X1
}
