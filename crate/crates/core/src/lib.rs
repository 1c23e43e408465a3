//! Exact arithmetic, polynomial families and verification catalogs for
//! Delannoy and Schröder polynomials.

pub mod check;
pub mod congruences;
pub mod conjectures;
pub mod error;
pub mod exact;
pub mod padic;
pub mod poly;
pub mod identities;
pub mod sequences;

pub use check::{CheckResult, Params, Status, Suite};
pub use error::{Error, Result};
pub use exact::Rational;
pub use padic::TrackedResidue;
pub use poly::{FpPolynomial, IntPolynomial, PolySeries, RatPolynomial};
pub use sequences::SequenceFamily;
