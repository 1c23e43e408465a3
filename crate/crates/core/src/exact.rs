//! Exact integer and rational primitives: binomials, Catalan and Narayana
//! numbers, Legendre symbols, Fermat quotients, Lucas sequences, Euler
//! numbers and p-adic valuations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::padic::TrackedResidue;

/// Reduced fraction of arbitrary-precision integers; the denominator is
/// always positive.
pub type Rational = BigRational;

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n as i64) / (n + 1)
}

/// Catalan numbers `C_0..C_{count-1}` via `C_{k+1} = 2(2k+1) C_k / (k+2)`.
pub fn catalan_table(count: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count);
    let mut c = BigInt::one();
    for k in 0..count as u64 {
        out.push(c.clone());
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    out
}

/// `N(n, k) = C(n, k) C(n, k-1) / n`; zero outside `1 <= k <= n`.
pub fn narayana(n: u64, k: i64) -> BigInt {
    if n == 0 || k < 1 || k as u64 > n {
        return BigInt::zero();
    }
    let num = binomial(n, k) * binomial(n, k - 1);
    let (q, r) = num.div_rem(&BigInt::from(n));
    debug_assert!(r.is_zero());
    q
}

fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin; the witness set is exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn odd_primes_in(lo: u64, hi_inclusive: u64) -> Vec<u64> {
    (lo.max(3)..=hi_inclusive)
        .filter(|&n| n % 2 == 1 && is_prime(n))
        .collect()
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    if p % 2 == 1 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(p))
    }
}

/// Legendre symbol `(a | p)` by Euler's criterion.
pub fn legendre_symbol(a: &BigInt, p: u64) -> Result<i32> {
    require_odd_prime(p)?;
    let pb = BigInt::from(p);
    let r = a.mod_floor(&pb);
    if r.is_zero() {
        return Ok(0);
    }
    let e = r.modpow(&BigInt::from((p - 1) / 2), &pb);
    Ok(if e.is_one() { 1 } else { -1 })
}

pub fn legendre_i64(a: i64, p: u64) -> Result<i32> {
    legendre_symbol(&BigInt::from(a), p)
}

/// `p^k` as a big integer.
pub fn prime_power(p: u64, k: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), k as usize)
}

/// Fermat quotient `(z^(p-1) - 1) / p`, known modulo `p^precision`.
pub fn fermat_quotient(z: &BigInt, p: u64, precision: u32) -> Result<TrackedResidue> {
    require_odd_prime(p)?;
    if (z % BigInt::from(p)).is_zero() {
        return Err(Error::NotCoprime {
            value: z.to_string(),
            prime: p,
        });
    }
    let modulus = prime_power(p, precision + 1);
    let zp = z.mod_floor(&modulus).modpow(&BigInt::from(p - 1), &modulus);
    let q = (zp - 1u32) / p;
    Ok(TrackedResidue::from_residue(&q, p, precision))
}

/// The Fermat quotient as an exact integer; only sensible for small `p`.
pub fn fermat_quotient_exact(z: &BigInt, p: u64) -> Result<BigInt> {
    require_odd_prime(p)?;
    let pb = BigInt::from(p);
    if (z % &pb).is_zero() {
        return Err(Error::NotCoprime {
            value: z.to_string(),
            prime: p,
        });
    }
    let num = num_traits::pow(z.clone(), (p - 1) as usize) - 1u32;
    Ok(num / pb)
}

/// Lucas sequence `u_n(A, B)` by the defining recurrence.
pub fn lucas_u(n: u64, a: &BigInt, b: &BigInt) -> BigInt {
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = a * &cur - b * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `u_n(A, B) mod m` by doubling on the pair `(u_k, u_{k+1})`:
/// `u_{2k} = u_k (2 u_{k+1} - A u_k)` and `u_{2k+1} = u_{k+1}^2 - B u_k^2`.
pub fn lucas_u_mod(n: u64, a: &BigInt, b: &BigInt, m: &BigInt) -> BigInt {
    let a = a.mod_floor(m);
    let b = b.mod_floor(m);
    let (mut uk, mut uk1) = (BigInt::zero(), BigInt::one().mod_floor(m));
    for bit in (0..64 - n.leading_zeros()).rev() {
        let u2k = (&uk * ((&uk1 << 1u32) - &a * &uk)).mod_floor(m);
        let u2k1 = (&uk1 * &uk1 - &b * &uk * &uk).mod_floor(m);
        if (n >> bit) & 1 == 1 {
            uk1 = (&a * &u2k1 - &b * &u2k).mod_floor(m);
            uk = u2k1;
        } else {
            uk = u2k;
            uk1 = u2k1;
        }
    }
    uk
}

pub fn fibonacci(n: u64) -> BigInt {
    lucas_u(n, &BigInt::one(), &BigInt::from(-1))
}

/// Lucas numbers `L_0 = 2, L_1 = 1, L_{n+1} = L_n + L_{n-1}`.
pub fn lucas_number(n: u64) -> BigInt {
    let (mut prev, mut cur) = (BigInt::from(2), BigInt::one());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Euler (secant) numbers `E_0..=E_max`: odd indices vanish and
/// `sum_j C(2m, 2j) E_{2j} = 0` for `m >= 1`.
pub fn euler_numbers(max: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); max + 1];
    e[0] = BigInt::one();
    for m in 1..=max / 2 {
        let mut acc = BigInt::zero();
        for j in 0..m {
            acc += binomial(2 * m as u64, 2 * j as i64) * &e[2 * j];
        }
        e[2 * m] = -acc;
    }
    e
}

pub fn euler_number(n: usize) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    euler_numbers(n).swap_remove(n)
}

/// Exponent of `p` in a nonzero integer; `None` for zero.
pub fn ord_p(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let pb = BigInt::from(p);
    let mut v = 0;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(&pb);
        if !r.is_zero() {
            return Some(v);
        }
        m = q;
        v += 1;
    }
}

/// p-adic valuation of a rational; `None` stands for `+infinity` (zero).
pub fn padic_valuation(q: &Rational, p: u64) -> Option<i64> {
    let num = ord_p(q.numer(), p)?;
    let den = ord_p(q.denom(), p).unwrap_or(0);
    Some(num as i64 - den as i64)
}

/// Whether `a ≡ b (mod p^k)` for rationals whose difference is p-integral.
pub fn congruent_rational(a: &Rational, b: &Rational, p: u64, k: u32) -> bool {
    match padic_valuation(&(a - b), p) {
        None => true,
        Some(v) => v >= k as i64,
    }
}

/// Residue of a p-integral rational modulo `m` (with `gcd(den, m) = 1`).
pub fn rational_mod(q: &Rational, m: &BigInt) -> Option<BigInt> {
    let den_inv = q.denom().mod_floor(m).modinv(m)?;
    Some((q.numer().mod_floor(m) * den_inv).mod_floor(m))
}

/// Inverse of `a` modulo `m`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Result<BigInt> {
    a.mod_floor(m)
        .modinv(m)
        .ok_or_else(|| Error::NotInvertible(format!("{a} mod {m}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(9, 4), int(126));
        assert_eq!(binomial(4, 7), int(0));
        assert_eq!(binomial(4, -1), int(0));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=60u64 {
            for k in 0..=n as i64 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn catalan_and_narayana() {
        assert_eq!(catalan(0), int(1));
        assert_eq!(catalan(3), int(5));
        assert_eq!(catalan(4), int(14));
        assert_eq!(narayana(2, 2), int(1));
        assert_eq!(narayana(3, 2), int(3));
        assert_eq!(narayana(5, 0), int(0));
        let table = catalan_table(41);
        for n in 1..=40u64 {
            let total: BigInt = (1..=n as i64).map(|k| narayana(n, k)).sum();
            assert_eq!(total, catalan(n));
            assert_eq!(table[n as usize], catalan(n));
        }
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(588_811));
        assert!(!is_prime(588_813));
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2, 3, 5, 7
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_i64(2, 7).unwrap(), 1);
        assert_eq!(legendre_i64(2, 3).unwrap(), -1);
        assert_eq!(legendre_i64(6, 3).unwrap(), 0);
        assert_eq!(legendre_i64(-1, 5).unwrap(), 1);
        assert_eq!(legendre_i64(-1, 7).unwrap(), -1);
        assert_eq!(legendre_i64(3, 2), Err(Error::NotOddPrime(2)));
        assert_eq!(legendre_i64(3, 9), Err(Error::NotOddPrime(9)));
    }

    #[test]
    fn fermat_quotient_examples() {
        let q = |z: i64, p: u64| fermat_quotient(&int(z), p, 1).unwrap().to_integer();
        assert_eq!(q(2, 3), int(1));
        assert_eq!(q(2, 5), int(3));
        assert_eq!(q(3, 5), int(1));
        assert!(matches!(
            fermat_quotient(&int(10), 5, 1),
            Err(Error::NotCoprime { .. })
        ));
        // Higher precision agrees with the exact quotient.
        for p in odd_primes_in(3, 40) {
            for z in [-7i64, -2, 2, 3, 10, 11] {
                if z.rem_euclid(p as i64) == 0 {
                    continue;
                }
                let exact = fermat_quotient_exact(&int(z), p).unwrap();
                let tracked = fermat_quotient(&int(z), p, 3).unwrap();
                let m = prime_power(p, 3);
                assert_eq!(tracked.residue_mod_power(3).unwrap(), exact.mod_floor(&m));
            }
        }
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(lucas_u(0, &int(3), &int(1)), int(0));
        assert_eq!(lucas_u(5, &int(1), &int(-1)), int(5));
        assert_eq!(lucas_u(3, &int(3), &int(9)), int(0));
        assert_eq!(lucas_number(0), int(2));
        assert_eq!(lucas_number(1), int(1));
        assert_eq!(lucas_number(4), int(7));
        for n in 1..40 {
            assert_eq!(lucas_number(n), fibonacci(n + 1) * 2 - fibonacci(n));
        }
    }

    #[test]
    fn lucas_doubling_matches_recurrence() {
        let m = int(1_000_003);
        for a in -4..=4 {
            for b in -4..=4 {
                for n in 0..70 {
                    let exact = lucas_u(n, &int(a), &int(b)).mod_floor(&m);
                    assert_eq!(lucas_u_mod(n, &int(a), &int(b), &m), exact, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_number(0), int(1));
        assert_eq!(euler_number(1), int(0));
        assert_eq!(euler_number(2), int(-1));
        assert_eq!(euler_number(4), int(5));
        assert_eq!(euler_number(6), int(-61));
        assert_eq!(euler_number(8), int(1385));
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(padic_valuation(&rat(18, 5), 3), Some(2));
        assert_eq!(padic_valuation(&rat(7, 9), 3), Some(-2));
        assert_eq!(padic_valuation(&rat(0, 1), 7), None);
    }

    #[test]
    fn rational_residues() {
        let m = int(27);
        assert_eq!(rational_mod(&rat(1, 2), &m), Some(int(14)));
        assert_eq!(rational_mod(&rat(1, 3), &m), None);
        assert!(congruent_rational(&rat(153, 1), &rat(-36, 1), 3, 3));
        assert!(!congruent_rational(&rat(153, 1), &rat(-35, 1), 3, 1));
    }
}
