use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::poly::RatPolynomial;

/// Dense polynomial over the integers, coefficients in ascending degree.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `a x + b`
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_i64s(&[b, a])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * x + Rational::from_integer(c.clone())
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    /// Divides every coefficient by `c`, failing if any division is inexact.
    pub fn div_exact_scalar(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::NonDivisible("division by zero".into()));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, a) in self.coeffs.iter().enumerate() {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NonDivisible(format!(
                    "coefficient of x^{i} ({a}) is not divisible by {c}"
                )));
            }
            out.push(q);
        }
        Ok(Self::new(out))
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `P(inner(x))` by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `P(x(x+1))`. Each Horner step multiplies by `x^2 + x`, which is two
    /// shifted additions.
    pub fn compose_x_xplus1(&self) -> Self {
        let mut acc: Vec<BigInt> = Vec::new();
        for c in self.coeffs.iter().rev() {
            let mut next = vec![BigInt::zero(); acc.len() + 2];
            for (i, a) in acc.iter().enumerate() {
                next[i + 1] += a;
                next[i + 2] += a;
            }
            next[0] += c;
            acc = next;
        }
        Self::new(acc)
    }

    /// `P(-1-x)`.
    pub fn reflect(&self) -> Self {
        self.compose(&Self::linear(-1, -1))
    }

    /// Quotient `q` with `self = b * q`, or [`Error::NonDivisible`].
    pub fn exact_div(&self, b: &Self) -> Result<Self> {
        let Some(db) = b.degree() else {
            return Err(Error::NonDivisible("division by the zero polynomial".into()));
        };
        let Some(da) = self.degree() else {
            return Ok(Self::zero());
        };
        if da < db {
            return Err(Error::NonDivisible(format!(
                "degree {da} is below divisor degree {db}"
            )));
        }
        let lead = b.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let top = &rem[i + db];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonDivisible(format!(
                    "leading coefficient {top} at x^{} is not divisible by {lead}",
                    i + db
                )));
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                rem[i + j] -= &q * bj;
            }
            quot[i] = q;
        }
        if let Some((i, r)) = rem.iter().enumerate().find(|(_, r)| !r.is_zero()) {
            return Err(Error::NonDivisible(format!("remainder has {r} x^{i}")));
        }
        Ok(Self::new(quot))
    }

    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Lowest index at which two polynomials differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find(|&i| self.coeff(i) != other.coeff(i))
    }
}

// Schoolbook product. Operand degrees stay in the low hundreds here; a
// Karatsuba split would only start paying off past a few hundred terms.
fn mul_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }
}

impl SubAssign<&IntPolynomial> for IntPolynomial {
    fn sub_assign(&mut self, rhs: &IntPolynomial) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        IntPolynomial::new(mul_dense(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, String, bool)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.abs().to_string(), c.is_negative()))
            .collect();
        write_terms(f, &terms)
    }
}

/// Shared renderer: `(degree, |coefficient|, negative)` in descending order.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: &[(usize, String, bool)],
) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (deg, mag, neg)) in terms.iter().enumerate() {
        match (idx, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        let show_coeff = *deg == 0 || mag != "1";
        if show_coeff {
            write!(f, "{mag}")?;
        }
        match deg {
            0 => {}
            1 => write!(f, "x")?,
            d => write!(f, "x^{d}")?,
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(&p(&[1]) * &p(&[1]), p(&[1]));
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(&p(&[1, 2]) * &p(&[1, 2]), p(&[1, 4, 4]));
        assert_eq!(&p(&[1, 2]) * &IntPolynomial::zero(), IntPolynomial::zero());
    }

    #[test]
    fn trimming_and_degree() {
        let z = p(&[0, 0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(p(&[3, 0, 5, 0]).degree(), Some(2));
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), IntPolynomial::zero());
    }

    #[test]
    fn evaluation() {
        let d2 = p(&[1, 6, 6]);
        assert_eq!(d2.eval_i64(1), int(13));
        assert_eq!(p(&[1, 2]).eval_rational(&rat(-1, 2)), rat(0, 1));
        assert_eq!(IntPolynomial::zero().eval_i64(5), int(0));
    }

    #[test]
    fn composition_examples() {
        assert_eq!(p(&[1]).compose_x_xplus1(), p(&[1]));
        assert_eq!(p(&[1, 2]).compose_x_xplus1(), p(&[1, 2, 2]));
        assert_eq!(p(&[0, 0, 1]).compose_x_xplus1(), p(&[0, 0, 1, 2, 1]));
        assert_eq!(IntPolynomial::zero().compose_x_xplus1(), IntPolynomial::zero());
    }

    #[test]
    fn exact_division_examples() {
        assert_eq!(p(&[1, 4, 4]).exact_div(&p(&[1, 2])).unwrap(), p(&[1, 2]));
        assert_eq!(p(&[1, 2]).exact_div(&p(&[1, 2])).unwrap(), p(&[1]));
        assert!(matches!(
            p(&[1, 0, 1]).exact_div(&p(&[1, 1])),
            Err(Error::NonDivisible(_))
        ));
        // Divisible over Q but not over Z.
        assert!(matches!(
            p(&[1, 1]).exact_div(&p(&[2, 2])),
            Err(Error::NonDivisible(_))
        ));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 2, 2]).to_string(), "2x^2 + 2x + 1");
        assert_eq!(p(&[-1, 0, -1]).to_string(), "-x^2 - 1");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn reflection() {
        // D_1(-1-x) = -(2x+1)
        assert_eq!(p(&[1, 2]).reflect(), p(&[-1, -2]));
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..=50, 0..=21).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!((&a * &b).degree(), Some(da + db));
            }
        }
    }

    proptest! {
        #[test]
        fn compose_matches_pointwise(a in small_poly(), t in -1000i64..1000) {
            let composed = a.compose_x_xplus1();
            prop_assert_eq!(composed.eval_i64(t), a.eval(&(int(t) * int(t + 1))));
        }

        #[test]
        fn exact_div_inverts_mul(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }
    }
}
