use std::ops::{Add, Mul, Sub};
use std::time::Instant;

use crate::check::{CheckResult, Params, Status, Suite};
use crate::exact::rat;
use crate::poly::{IntPolynomial, RatPolynomial};
use crate::sequences::small_w_poly;

/// Power series in `y` with coefficients in `Q[x]`, truncated after `y^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySeries {
    terms: Vec<RatPolynomial>,
    order: usize,
}

impl PolySeries {
    pub fn zero(order: usize) -> Self {
        Self {
            terms: vec![RatPolynomial::zero(); order + 1],
            order,
        }
    }

    /// Terms beyond `y^order` are dropped.
    pub fn from_terms(mut terms: Vec<RatPolynomial>, order: usize) -> Self {
        terms.resize(order + 1, RatPolynomial::zero());
        Self { terms, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn term(&self, i: usize) -> &RatPolynomial {
        &self.terms[i]
    }

    pub fn terms(&self) -> &[RatPolynomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(RatPolynomial::is_zero)
    }

    /// Multiplication of every term by a polynomial in `x`.
    pub fn scale(&self, c: &RatPolynomial) -> Self {
        Self {
            terms: self.terms.iter().map(|t| t * c).collect(),
            order: self.order,
        }
    }

    /// Multiplication by `y^k`, truncated.
    pub fn shift(&self, k: usize) -> Self {
        let mut terms = vec![RatPolynomial::zero(); k.min(self.order + 1)];
        terms.extend(self.terms.iter().cloned());
        Self::from_terms(terms, self.order)
    }
}

impl Add for &PolySeries {
    type Output = PolySeries;

    fn add(self, rhs: &PolySeries) -> PolySeries {
        let order = self.order.min(rhs.order);
        let terms = (0..=order).map(|i| &self.terms[i] + &rhs.terms[i]).collect();
        PolySeries { terms, order }
    }
}

impl Sub for &PolySeries {
    type Output = PolySeries;

    fn sub(self, rhs: &PolySeries) -> PolySeries {
        let order = self.order.min(rhs.order);
        let terms = (0..=order).map(|i| &self.terms[i] - &rhs.terms[i]).collect();
        PolySeries { terms, order }
    }
}

impl Mul for &PolySeries {
    type Output = PolySeries;

    fn mul(self, rhs: &PolySeries) -> PolySeries {
        let order = self.order.min(rhs.order);
        let mut terms = vec![RatPolynomial::zero(); order + 1];
        for (i, a) in self.terms.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.terms.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    terms[i + j] += &(a * b);
                }
            }
        }
        PolySeries { terms, order }
    }
}

/// Checks the algebraic form of the generating function of `w_n(x)`:
/// with `G = sum_{n=1..N} w_n(x) y^n`,
/// `(1 - y - 2xy - 2x(x+1) y G)^2 = (y-1)^2 - 4xy` through `y^(N+1)`.
pub fn series_gf_check(order: usize) -> CheckResult {
    let started = Instant::now();
    let mut params = Params::new();
    params.insert("N".into(), order as i64);
    if order == 0 {
        return CheckResult::new(Suite::Identities, "EQ_4_6", params, Status::Skip)
            .with_witness("N must be at least 1")
            .with_elapsed(started.elapsed());
    }
    let trunc = order + 1;
    let x_x1 = IntPolynomial::from_i64s(&[0, 1, 1]).to_rational();
    // A = 1 - (1 + 2x) y - 2x(x+1) y G; the y^n term for n >= 2 is -2x(x+1) w_{n-1}.
    let mut a_terms = vec![
        RatPolynomial::one(),
        IntPolynomial::from_i64s(&[-1, -2]).to_rational(),
    ];
    for n in 2..=trunc {
        let w = small_w_poly(n as u64 - 1).to_rational();
        a_terms.push((&x_x1 * &w).scale(&rat(-2, 1)));
    }
    let a = PolySeries::from_terms(a_terms, trunc);
    let lhs = &a * &a;
    let rhs = PolySeries::from_terms(
        vec![
            RatPolynomial::one(),
            IntPolynomial::from_i64s(&[-2, -4]).to_rational(),
            RatPolynomial::one(),
        ],
        trunc,
    );
    let residual = &lhs - &rhs;
    let status;
    let witness;
    match residual.terms().iter().position(|t| !t.is_zero()) {
        None => {
            status = Status::Pass;
            witness = format!(
                "residual vanishes through y^{trunc}; y^2 coefficient of the square is {}",
                lhs.term(2.min(trunc))
            );
        }
        Some(i) => {
            status = Status::Fail;
            witness = format!(
                "y^{i}: square has {}, expected {}",
                lhs.term(i),
                rhs.term(i)
            );
        }
    }
    CheckResult::new(Suite::Identities, "EQ_4_6", params, status)
        .with_witness(witness)
        .with_elapsed(started.elapsed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn series(coeffs: &[Vec<i64>], order: usize) -> PolySeries {
        PolySeries::from_terms(
            coeffs
                .iter()
                .map(|c| IntPolynomial::from_i64s(c).to_rational())
                .collect(),
            order,
        )
    }

    #[test]
    fn gf_small_orders() {
        let r1 = series_gf_check(1);
        assert_eq!(r1.status, Status::Pass, "{}", r1.witness);
        let r2 = series_gf_check(2);
        assert_eq!(r2.status, Status::Pass, "{}", r2.witness);
        assert!(r2.witness.contains("y^2 coefficient of the square is 1"));
    }

    #[test]
    fn gf_order_fifty() {
        assert_eq!(series_gf_check(50).status, Status::Pass);
    }

    #[test]
    fn truncation_on_shift() {
        let s = series(&[vec![1], vec![0, 1]], 2);
        let t = s.shift(2);
        assert_eq!(t.term(2), &RatPolynomial::one());
        assert_eq!(t.order(), 2);
        assert!(s.scale(&RatPolynomial::zero()).is_zero());
        let half = s.scale(&RatPolynomial::constant(rat(1, 2)));
        assert_eq!(half.term(0).coeff(0), rat(1, 2));
    }

    fn small_series() -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-9i64..=9, 0..4), 0..7)
    }

    proptest! {
        #[test]
        fn truncated_product_matches_exact(a in small_series(), b in small_series(), order in 0usize..6) {
            let full = (a.len() + b.len()).max(order);
            let exact = &series(&a, full) * &series(&b, full);
            let truncated = &series(&a, order) * &series(&b, order);
            for i in 0..=order {
                prop_assert_eq!(truncated.term(i), exact.term(i));
            }
        }
    }
}
