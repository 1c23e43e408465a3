//! Polynomials over the prime field `F_p` and Rabin's irreducibility test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::is_prime;
use crate::poly::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPolynomial {
    prime: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse.
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl FpPolynomial {
    pub fn new(prime: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % prime).collect();
        trim(&mut coeffs);
        Self { prime, coeffs }
    }

    /// Reduction of an integer polynomial; errors if the leading coefficient
    /// vanishes modulo `p` (the degree would drop).
    pub fn from_int(poly: &IntPolynomial, p: u64) -> Result<Self> {
        let pb = BigInt::from(p);
        let coeffs: Vec<u64> = poly
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits in u64"))
            .collect();
        if coeffs.last() == Some(&0) {
            return Err(Error::ZeroLeadingCoefficient(p));
        }
        Ok(Self::new(p, coeffs))
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => {
                let inv = inv_mod(lead, self.prime);
                Self::new(
                    self.prime,
                    self.coeffs.iter().map(|&c| mul_mod(c, inv, self.prime)).collect(),
                )
            }
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let p = self.prime;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        Self::new(p, coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.prime;
        if self.is_zero() || rhs.is_zero() {
            return Self::new(p, Vec::new());
        }
        let mut out = vec![0u128; self.coeffs.len() + rhs.coeffs.len() - 1];
        let p128 = p as u128;
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u128 * b as u128) % p128;
            }
        }
        Self::new(p, out.into_iter().map(|c| c as u64).collect())
    }

    /// Remainder modulo a nonzero polynomial.
    pub fn rem(&self, m: &Self) -> Self {
        let p = self.prime;
        let dm = m.degree().expect("nonzero modulus");
        let inv = inv_mod(*m.coeffs.last().unwrap(), p);
        let mut r = self.coeffs.clone();
        while r.len() > dm {
            let top = *r.last().unwrap();
            if top != 0 {
                let q = mul_mod(top, inv, p);
                let shift = r.len() - 1 - dm;
                for (j, &mj) in m.coeffs.iter().enumerate() {
                    let t = mul_mod(q, mj, p);
                    r[shift + j] = (r[shift + j] + p - t) % p;
                }
            }
            r.pop();
        }
        Self::new(p, r)
    }

    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mul_mod(&self, rhs: &Self, m: &Self) -> Self {
        self.mul(rhs).rem(m)
    }

    pub fn pow_mod(&self, mut e: u64, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::new(self.prime, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            base = base.mul_mod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The Frobenius map `g -> g^p` on `F_p[x]/(f)` as a matrix whose row `i`
/// holds `x^(p i) mod f`.
struct Frobenius {
    rows: Vec<Vec<u64>>,
    modulus: FpPolynomial,
}

impl Frobenius {
    fn new(f: &FpPolynomial) -> Self {
        let p = f.prime;
        let d = f.degree().unwrap();
        let xp = FpPolynomial::x(p).pow_mod(p, f);
        let mut rows = Vec::with_capacity(d);
        let mut cur = FpPolynomial::new(p, vec![1]);
        for _ in 0..d {
            let mut row = cur.coeffs.clone();
            row.resize(d, 0);
            rows.push(row);
            cur = cur.mul_mod(&xp, f);
        }
        Self {
            rows,
            modulus: f.clone(),
        }
    }

    fn apply(&self, g: &FpPolynomial) -> FpPolynomial {
        let p = self.modulus.prime as u128;
        let d = self.rows.len();
        let mut acc = vec![0u128; d];
        for (i, &gi) in g.coeffs.iter().enumerate() {
            if gi == 0 {
                continue;
            }
            for (a, &r) in acc.iter_mut().zip(&self.rows[i]) {
                *a = (*a + gi as u128 * r as u128) % p;
            }
        }
        FpPolynomial::new(self.modulus.prime, acc.into_iter().map(|c| c as u64).collect())
    }
}

/// Rabin's criterion: a degree-`d` polynomial `f` over `F_p` is irreducible
/// iff `x^(p^d) ≡ x (mod f)` and `gcd(x^(p^(d/q)) - x, f) = 1` for every
/// prime `q | d`.
pub fn fp_irreducible(f: &FpPolynomial) -> Result<bool> {
    let p = f.prime;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let d = match f.degree() {
        None => return Err(Error::ZeroLeadingCoefficient(p)),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(d) => d,
    };
    if d == 1 {
        return Ok(true);
    }
    let f = f.monic();
    let frob = Frobenius::new(&f);
    let x = FpPolynomial::x(p).rem(&f);
    let divisors = prime_divisors(d);
    let checkpoints: Vec<usize> = divisors.iter().map(|q| d / q).collect();
    let mut h = x.clone();
    for i in 1..=d {
        h = frob.apply(&h);
        if checkpoints.contains(&i) && !h.sub(&x).gcd(&f).is_one() {
            return Ok(false);
        }
    }
    Ok(h == x)
}
