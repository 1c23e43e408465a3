//! p-adic numbers known to finite precision.
//!
//! A [`TrackedResidue`] stores `p^v * u` where `u` is a unit known modulo
//! `p^precision`. Zero is special: its valuation is `+inf` and `precision`
//! then records the absolute precision `K` to which the value is known to be
//! `≡ 0 (mod p^K)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{mod_inverse, ord_p, padic_valuation, prime_power, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackedResidue {
    prime: u64,
    valuation: Option<u32>,
    unit: BigInt,
    precision: u32,
}

impl TrackedResidue {
    /// Exact integer `n`, with the unit part kept to `precision` digits.
    pub fn from_integer(n: &BigInt, p: u64, precision: u32) -> Self {
        match ord_p(n, p) {
            None => Self::zero(p, precision),
            Some(v) => {
                let unit = (n / prime_power(p, v)).mod_floor(&prime_power(p, precision));
                Self {
                    prime: p,
                    valuation: Some(v),
                    unit,
                    precision,
                }
            }
        }
    }

    pub fn from_i64(n: i64, p: u64, precision: u32) -> Self {
        Self::from_integer(&BigInt::from(n), p, precision)
    }

    /// A value only known modulo `p^absolute`.
    pub fn from_residue(r: &BigInt, p: u64, absolute: u32) -> Self {
        let m = prime_power(p, absolute);
        let r = r.mod_floor(&m);
        match ord_p(&r, p) {
            None => Self::zero(p, absolute),
            Some(v) => Self {
                prime: p,
                valuation: Some(v),
                unit: (r / prime_power(p, v)).mod_floor(&prime_power(p, absolute - v)),
                precision: absolute - v,
            },
        }
    }

    /// A p-integral rational with unit part kept to `precision` digits.
    pub fn from_rational(q: &Rational, p: u64, precision: u32) -> Result<Self> {
        match padic_valuation(q, p) {
            None => Ok(Self::zero(p, precision)),
            Some(v) if v < 0 => Err(Error::NotInvertible(format!("{q} has {p} in its denominator"))),
            Some(v) => {
                let v = v as u32;
                let m = prime_power(p, precision);
                let num = q.numer() / prime_power(p, v);
                let unit = (num.mod_floor(&m) * mod_inverse(q.denom(), &m)?).mod_floor(&m);
                Ok(Self {
                    prime: p,
                    valuation: Some(v),
                    unit,
                    precision,
                })
            }
        }
    }

    /// Zero known modulo `p^absolute`.
    pub fn zero(p: u64, absolute: u32) -> Self {
        Self {
            prime: p,
            valuation: None,
            unit: BigInt::zero(),
            precision: absolute,
        }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// `None` is `+inf`.
    pub fn valuation(&self) -> Option<u32> {
        self.valuation
    }

    pub fn unit(&self) -> &BigInt {
        &self.unit
    }

    /// Digits of the unit part (absolute digits for zero).
    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// `m` such that the value is determined modulo `p^m`.
    pub fn absolute_precision(&self) -> u32 {
        match self.valuation {
            None => self.precision,
            Some(v) => v + self.precision,
        }
    }

    pub fn is_known_zero(&self) -> bool {
        self.valuation.is_none()
    }

    /// Representative in `[0, p^absolute_precision)`.
    pub fn to_integer(&self) -> BigInt {
        match self.valuation {
            None => BigInt::zero(),
            Some(v) => &self.unit * prime_power(self.prime, v),
        }
    }

    /// Residue modulo `p^m`; fails unless the value is known that far.
    pub fn residue_mod_power(&self, m: u32) -> Result<BigInt> {
        self.require(m)?;
        Ok(self.to_integer().mod_floor(&prime_power(self.prime, m)))
    }

    /// Whether the value is `≡ 0 (mod p^m)`.
    pub fn is_zero_mod_power(&self, m: u32) -> Result<bool> {
        match self.valuation {
            Some(v) => Ok(v >= m),
            None if self.precision >= m => Ok(true),
            None => Err(Error::PrecisionExhausted {
                needed: m,
                available: self.precision,
            }),
        }
    }

    /// Asserts that the value is known modulo `p^m`.
    pub fn require(&self, m: u32) -> Result<()> {
        let available = self.absolute_precision();
        if available >= m {
            Ok(())
        } else {
            Err(Error::PrecisionExhausted {
                needed: m,
                available,
            })
        }
    }

    /// `self ≡ other (mod p^m)`, after asserting both are known that far.
    pub fn congruent(&self, other: &Self, m: u32) -> Result<bool> {
        self.require(m)?;
        other.require(m)?;
        (self - other).is_zero_mod_power(m)
    }

    /// Reduces the stored precision to at most `m` absolute digits.
    pub fn truncate(&self, m: u32) -> Self {
        if self.absolute_precision() <= m {
            return self.clone();
        }
        Self::from_residue(&self.to_integer(), self.prime, m)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        assert_eq!(self.prime, rhs.prime, "mixed primes");
        let p = self.prime;
        let Some(vb) = rhs.valuation else {
            return Err(Error::NotInvertible(format!("zero modulo {p}^{}", rhs.precision)));
        };
        match self.valuation {
            None => {
                if self.precision <= vb {
                    return Err(Error::PrecisionExhausted {
                        needed: vb + 1,
                        available: self.precision,
                    });
                }
                Ok(Self::zero(p, self.precision - vb))
            }
            Some(va) => {
                if va < vb {
                    return Err(Error::NotInvertible(format!(
                        "division leaves valuation {va} - {vb} < 0 at p = {p}"
                    )));
                }
                let precision = self.precision.min(rhs.precision);
                let m = prime_power(p, precision);
                let unit = (&self.unit * mod_inverse(&rhs.unit, &m)?).mod_floor(&m);
                Ok(Self {
                    prime: p,
                    valuation: Some(va - vb),
                    unit,
                    precision,
                })
            }
        }
    }

    /// Multiplication by an exact integer.
    pub fn scale(&self, c: &BigInt) -> Self {
        self * &Self::from_integer(c, self.prime, self.precision.max(1))
    }
}

impl Mul for &TrackedResidue {
    type Output = TrackedResidue;

    fn mul(self, rhs: &TrackedResidue) -> TrackedResidue {
        assert_eq!(self.prime, rhs.prime, "mixed primes");
        let p = self.prime;
        match (self.valuation, rhs.valuation) {
            (Some(va), Some(vb)) => {
                let precision = self.precision.min(rhs.precision);
                let unit = (&self.unit * &rhs.unit).mod_floor(&prime_power(p, precision));
                TrackedResidue {
                    prime: p,
                    valuation: Some(va + vb),
                    unit,
                    precision,
                }
            }
            (Some(va), None) => TrackedResidue::zero(p, va + rhs.precision),
            (None, Some(vb)) => TrackedResidue::zero(p, vb + self.precision),
            (None, None) => TrackedResidue::zero(p, self.precision + rhs.precision),
        }
    }
}

impl Add for &TrackedResidue {
    type Output = TrackedResidue;

    fn add(self, rhs: &TrackedResidue) -> TrackedResidue {
        assert_eq!(self.prime, rhs.prime, "mixed primes");
        let p = self.prime;
        match (self.valuation, rhs.valuation) {
            (None, None) => TrackedResidue::zero(p, self.precision.min(rhs.precision)),
            (Some(_), None) => absorb_zero(self, rhs.precision),
            (None, Some(_)) => absorb_zero(rhs, self.precision),
            (Some(va), Some(vb)) => {
                let (lo, hi) = if va <= vb { (self, rhs) } else { (rhs, self) };
                let vlo = va.min(vb);
                let gap = va.max(vb) - vlo;
                let inner_precision = lo.precision.min(hi.precision + gap);
                let m = prime_power(p, inner_precision);
                let inner = (&lo.unit + &hi.unit * prime_power(p, gap)).mod_floor(&m);
                match ord_p(&inner, p) {
                    None => TrackedResidue::zero(p, vlo + inner_precision),
                    Some(e) => TrackedResidue {
                        prime: p,
                        valuation: Some(vlo + e),
                        unit: inner / prime_power(p, e),
                        precision: inner_precision - e,
                    },
                }
            }
        }
    }
}

// `x + z` where `z ≡ 0 (mod p^zero_abs)` and `x` is finite.
fn absorb_zero(x: &TrackedResidue, zero_abs: u32) -> TrackedResidue {
    let v = x.valuation.expect("finite operand");
    if zero_abs <= v {
        return TrackedResidue::zero(x.prime, zero_abs);
    }
    let precision = x.precision.min(zero_abs - v);
    TrackedResidue {
        prime: x.prime,
        valuation: Some(v),
        unit: x.unit.mod_floor(&prime_power(x.prime, precision)),
        precision,
    }
}

impl Neg for &TrackedResidue {
    type Output = TrackedResidue;

    fn neg(self) -> TrackedResidue {
        match self.valuation {
            None => self.clone(),
            Some(_) => TrackedResidue {
                unit: (-&self.unit).mod_floor(&prime_power(self.prime, self.precision)),
                ..self.clone()
            },
        }
    }
}

impl Sub for &TrackedResidue {
    type Output = TrackedResidue;

    fn sub(self, rhs: &TrackedResidue) -> TrackedResidue {
        self + &(-rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TrackedResidue {
            type Output = TrackedResidue;
            fn $m(self, rhs: TrackedResidue) -> TrackedResidue {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&TrackedResidue> for TrackedResidue {
            type Output = TrackedResidue;
            fn $m(self, rhs: &TrackedResidue) -> TrackedResidue {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TrackedResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.valuation {
            None => write!(f, "0 (mod {}^{})", self.prime, self.precision),
            Some(v) => write!(
                f,
                "{} (mod {}^{})",
                self.to_integer(),
                self.prime,
                v + self.precision
            ),
        }
    }
}
