use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::Rational;
use crate::poly::int::write_terms;
use crate::poly::IntPolynomial;

/// Dense polynomial over the rationals, coefficients in ascending degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RatPolynomial {
    coeffs: Vec<Rational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Least common multiple of the coefficient denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// `(P, d)` with `self = P / d` and `P` integral.
    pub fn to_scaled_integer(&self) -> (IntPolynomial, BigInt) {
        let d = self.common_denominator();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&d / c.denom()))
            .collect();
        (IntPolynomial::new(coeffs), d)
    }

    /// The same polynomial over the integers, if every coefficient is integral.
    pub fn to_integer(&self) -> Option<IntPolynomial> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(IntPolynomial::new(
                self.coeffs.iter().map(|c| c.to_integer()).collect(),
            ))
        } else {
            None
        }
    }

    /// Indices whose coefficient is not an integer.
    pub fn non_integral_terms(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_integer())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&i| self.coeff(i) != other.coeff(i))
    }
}

impl From<&IntPolynomial> for RatPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        p.to_rational()
    }
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;

    fn add(self, rhs: &RatPolynomial) -> RatPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&RatPolynomial> for RatPolynomial {
    fn add_assign(&mut self, rhs: &RatPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }
}

impl Sub for &RatPolynomial {
    type Output = RatPolynomial;

    fn sub(self, rhs: &RatPolynomial) -> RatPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &RatPolynomial {
    type Output = RatPolynomial;

    fn neg(self) -> RatPolynomial {
        RatPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

// Clears denominators first so the quadratic inner loop runs on integers.
impl Mul for &RatPolynomial {
    type Output = RatPolynomial;

    fn mul(self, rhs: &RatPolynomial) -> RatPolynomial {
        let (a, da) = self.to_scaled_integer();
        let (b, db) = rhs.to_scaled_integer();
        let den = da * db;
        let prod = &a * &b;
        RatPolynomial::new(
            prod.coeffs()
                .iter()
                .map(|c| Rational::new(c.clone(), den.clone()))
                .collect(),
        )
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatPolynomial {
            type Output = RatPolynomial;
            fn $m(self, rhs: RatPolynomial) -> RatPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatPolynomial> for RatPolynomial {
            type Output = RatPolynomial;
            fn $m(self, rhs: &RatPolynomial) -> RatPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, String, bool)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mag = c.abs();
                let text = if mag.is_integer() {
                    mag.to_integer().to_string()
                } else {
                    format!("({mag})")
                };
                (i, text, c.is_negative())
            })
            .collect();
        write_terms(f, &terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn rp(c: &[(i64, i64)]) -> RatPolynomial {
        RatPolynomial::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(rp(&[(1, 1), (2, 1)]).eval(&rat(-1, 2)), rat(0, 1));
        assert_eq!(rp(&[(1, 1), (6, 1), (6, 1)]).eval(&rat(1, 1)), rat(13, 1));
        assert_eq!(RatPolynomial::zero().eval(&rat(5, 1)), rat(0, 1));
    }

    #[test]
    fn multiplication_clears_denominators() {
        let a = rp(&[(1, 2), (1, 3)]);
        let b = rp(&[(2, 1), (3, 5)]);
        let prod = &a * &b;
        assert_eq!(prod, rp(&[(1, 1), (3, 10 ), (1, 5)]).clone() + rp(&[(0, 1), (2, 3)]));
    }

    #[test]
    fn integrality() {
        assert!(rp(&[(2, 1), (4, 2)]).to_integer().is_some());
        let half = rp(&[(1, 1), (1, 2)]);
        assert!(half.to_integer().is_none());
        assert_eq!(half.non_integral_terms(), vec![1]);
        let (scaled, d) = half.to_scaled_integer();
        assert_eq!(d, BigInt::from(2));
        assert_eq!(scaled, IntPolynomial::from_i64s(&[2, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(rp(&[(-1, 1), (1, 3)]).to_string(), "(1/3)x - 1");
    }
}
