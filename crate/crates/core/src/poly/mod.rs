//! Dense univariate polynomials over `Z`, `Q` and `F_p`, plus truncated
//! power series in a second variable.

mod fp;
mod int;
mod rat;
mod series;

pub use fp::{fp_irreducible, FpPolynomial};
pub use int::IntPolynomial;
pub use rat::RatPolynomial;
pub use series::{series_gf_check, PolySeries};

use crate::error::Result;
use crate::exact::Rational;

pub fn poly_mul(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a * b
}

pub fn poly_eval(p: &RatPolynomial, x: &Rational) -> Rational {
    p.eval(x)
}

pub fn compose_x_xplus1(p: &IntPolynomial) -> IntPolynomial {
    p.compose_x_xplus1()
}

pub fn exact_poly_div(a: &IntPolynomial, b: &IntPolynomial) -> Result<IntPolynomial> {
    a.exact_div(b)
}
