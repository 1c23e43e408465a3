//! Families evaluated at a fixed integer `x0` modulo `p^k`, driven by their
//! recurrences.
//!
//! The leading coefficients of the recurrences vanish modulo `p` at some
//! indices, so each step divides by a p-adic non-unit. The stream therefore
//! runs at a working precision of `k` plus the total valuation of all
//! leading coefficients it will meet, and every division checks that the
//! numerator carries the required power of `p`.

use std::collections::VecDeque;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{ord_p, prime_power, require_odd_prime};
use crate::padic::TrackedResidue;

use super::SequenceFamily;

/// A step producing term `m`: `lead * a_m = sum_i coeffs[i] * a_{m-order+i}`.
type StepFn = Box<dyn Fn(u64) -> (BigInt, Vec<BigInt>) + Send>;

struct Recurrence {
    first_index: u64,
    seeds: Vec<BigInt>,
    step: StepFn,
}

fn recurrence_for(family: &SequenceFamily, x0: &BigInt) -> Result<Recurrence> {
    let x = x0.clone();
    let two_x1 = 2u32 * &x + 1u32;
    let b = |m: u64| BigInt::from(m);
    let r = match family {
        SequenceFamily::DelannoyPoly => Recurrence {
            first_index: 0,
            seeds: vec![BigInt::from(1), two_x1.clone()],
            step: Box::new(move |m| {
                let n = m - 2;
                (b(n + 2), vec![-b(n + 1), &two_x1 * (2 * n + 3)])
            }),
        },
        SequenceFamily::LittleSchroderPoly => Recurrence {
            first_index: 1,
            seeds: vec![BigInt::from(1), two_x1.clone()],
            step: Box::new(move |m| {
                let n = m - 3;
                (b(n + 4), vec![-b(n + 1), &two_x1 * (2 * n + 5)])
            }),
        },
        SequenceFamily::LargeSchroderPoly => {
            let x1 = &x + 1u32;
            Recurrence {
                first_index: 0,
                seeds: vec![BigInt::from(1), x1.clone(), &x1 * &two_x1],
                step: Box::new(move |m| {
                    let n = m - 3;
                    (b(n + 4), vec![-b(n + 1), &two_x1 * (2 * n + 5)])
                }),
            }
        }
        SequenceFamily::BigW => Recurrence {
            first_index: 1,
            seeds: vec![
                BigInt::from(1),
                two_x1.clone(),
                10u32 * &x * &x + 5u32 * &x + 1u32,
            ],
            step: Box::new(move |m| {
                let n = BigInt::from(m - 3);
                let n1 = &n + 1u32;
                let n3 = &n + 3u32;
                let t3 = 2u32 * &n + 3u32;
                let t5 = 2u32 * &n + 5u32;
                let lead = &n3 * &n3 * (&n + 4u32) * &t3;
                let c0 = &n * &n1 * &n1 * &t5;
                let c1 = -(&n1 * &t3 * (4u32 * &x * &t5 * &t5 + 3u32 * &n * &n + 13u32 * &n + 14u32));
                let c2 = &n3 * &t5 * (4u32 * &x * &t3 * &t3 + 3u32 * &n * &n + 11u32 * &n + 10u32);
                (lead, vec![c0, c1, c2])
            }),
        },
        SequenceFamily::SmallW => Recurrence {
            first_index: 1,
            seeds: vec![BigInt::from(1), two_x1.clone()],
            step: Box::new(move |m| {
                let n = m - 2;
                (b(n + 3), vec![-b(n), &two_x1 * (2 * n + 3)])
            }),
        },
        SequenceFamily::TrinomialT { b: bb, c } => {
            let (bb, c) = (BigInt::from(*bb), BigInt::from(*c));
            let d = &bb * &bb - 4u32 * &c;
            Recurrence {
                first_index: 0,
                seeds: vec![BigInt::from(1), bb.clone()],
                step: Box::new(move |m| {
                    let n = m - 2;
                    (b(n + 2), vec![-(&d * (n + 1)), &bb * (2 * n + 3)])
                }),
            }
        }
        SequenceFamily::MotzkinM { b: bb, c } => {
            let (bb, c) = (BigInt::from(*bb), BigInt::from(*c));
            let d = &bb * &bb - 4u32 * &c;
            Recurrence {
                first_index: 0,
                seeds: vec![BigInt::from(1), bb.clone()],
                step: Box::new(move |m| {
                    let n = m - 2;
                    (b(n + 4), vec![-(&d * (n + 1)), &bb * (2 * n + 5)])
                }),
            }
        }
        other => {
            return Err(Error::UnsupportedFamily {
                family: other.name(),
            })
        }
    };
    Ok(r)
}

/// Lazily produced terms `a_{first}, ..., a_{n_max}` modulo `p^k`.
pub struct ModStream {
    prime: u64,
    target: u32,
    working: u32,
    next_index: u64,
    n_max: u64,
    recurrence: Recurrence,
    window: VecDeque<TrackedResidue>,
}

impl ModStream {
    /// Requires an odd prime `p`, `k >= 1` and `n_max < 2p`.
    pub fn new(family: &SequenceFamily, x0: &BigInt, p: u64, k: u32, n_max: u64) -> Result<Self> {
        require_odd_prime(p)?;
        if k == 0 {
            return Err(Error::PredicateViolated {
                id: "mod_stream".into(),
                reason: "k must be at least 1".into(),
            });
        }
        if n_max >= 2 * p {
            return Err(Error::PredicateViolated {
                id: "mod_stream".into(),
                reason: format!("n_max = {n_max} must be below 2p = {}", 2 * p),
            });
        }
        let recurrence = recurrence_for(family, x0)?;
        let first_step = recurrence.first_index + recurrence.seeds.len() as u64;
        let mut extra = 0u32;
        for m in first_step..=n_max {
            let (lead, _) = (recurrence.step)(m);
            extra += ord_p(&lead, p).ok_or_else(|| {
                Error::Inconsistent(format!("leading coefficient vanishes at index {m}"))
            })?;
        }
        Ok(Self {
            prime: p,
            target: k,
            working: k + extra,
            next_index: recurrence.first_index,
            n_max,
            recurrence,
            window: VecDeque::new(),
        })
    }

    pub fn working_precision(&self) -> u32 {
        self.working
    }

    fn step(&mut self) -> Result<TrackedResidue> {
        let p = self.prime;
        let m = self.next_index;
        let offset = (m - self.recurrence.first_index) as usize;
        let term = if offset < self.recurrence.seeds.len() {
            let seed = &self.recurrence.seeds[offset];
            TrackedResidue::from_residue(seed, p, self.working)
        } else {
            let (lead, coeffs) = (self.recurrence.step)(m);
            let start = self.window.len() - coeffs.len();
            let mut num = TrackedResidue::zero(p, self.working);
            for (c, a) in coeffs.iter().zip(self.window.iter().skip(start)) {
                num = &num + &a.scale(c);
            }
            num.checked_div(&TrackedResidue::from_integer(&lead, p, self.working))
                .map_err(|e| match e {
                    Error::NotInvertible(msg) => Error::Inconsistent(format!(
                        "numerator at index {m} is not divisible by {lead}: {msg}"
                    )),
                    other => other,
                })?
        };
        self.window.push_back(term.clone());
        if self.window.len() > 3 {
            self.window.pop_front();
        }
        self.next_index += 1;
        term.require(self.target)?;
        Ok(term.truncate(self.target))
    }
}

impl Iterator for ModStream {
    type Item = Result<(u64, TrackedResidue)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next_index > self.n_max {
            return None;
        }
        let m = self.next_index;
        Some(self.step().map(|t| (m, t)))
    }
}

/// Terms of `family` at `x0` modulo `p^k`, in index order from the first
/// index of the family (0, or 1 for `s`, `W`, `w`) through `n_max`.
pub fn mod_stream(
    family: &SequenceFamily,
    x0: &BigInt,
    p: u64,
    k: u32,
    n_max: u64,
) -> Result<Vec<TrackedResidue>> {
    ModStream::new(family, x0, p, k, n_max)?
        .map(|r| r.map(|(_, t)| t))
        .collect()
}

/// Residues of the stream as integers in `[0, p^k)`.
pub fn mod_stream_residues(
    family: &SequenceFamily,
    x0: &BigInt,
    p: u64,
    k: u32,
    n_max: u64,
) -> Result<Vec<BigInt>> {
    let m = prime_power(p, k);
    Ok(mod_stream(family, x0, p, k, n_max)?
        .into_iter()
        .map(|t| num_integer::Integer::mod_floor(&t.to_integer(), &m))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::sequences::{
        big_w_poly, delannoy_poly, motzkin_m, schroder_large_poly, schroder_little_poly,
        small_w_poly, trinomial_t,
    };
    use num_integer::Integer;

    fn check(family: SequenceFamily, first: u64, exact: impl Fn(u64) -> BigInt, x0: i64) {
        for p in [3u64, 5, 7, 11, 13] {
            for k in 1..=3u32 {
                let n_max = 2 * p - 1;
                let got = mod_stream_residues(&family, &int(x0), p, k, n_max)
                    .unwrap_or_else(|e| panic!("{family} p={p} k={k}: {e}"));
                let m = prime_power(p, k);
                for (i, r) in got.iter().enumerate() {
                    let n = first + i as u64;
                    assert_eq!(*r, exact(n).mod_floor(&m), "{family} x0={x0} p={p} k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn streams_match_exact_values() {
        for x0 in [-3i64, -1, 0, 1, 2, 5] {
            let x = int(x0);
            check(SequenceFamily::DelannoyPoly, 0, |n| delannoy_poly(n).eval(&x), x0);
            check(SequenceFamily::LittleSchroderPoly, 1, |n| schroder_little_poly(n).eval(&x), x0);
            check(SequenceFamily::LargeSchroderPoly, 0, |n| schroder_large_poly(n).eval(&x), x0);
            check(SequenceFamily::BigW, 1, |n| big_w_poly(n).eval(&x), x0);
            check(SequenceFamily::SmallW, 1, |n| small_w_poly(n).eval(&x), x0);
        }
        for (b, c) in [(1i64, 1i64), (2, 1), (3, 2), (-2, 5), (0, 3)] {
            check(SequenceFamily::TrinomialT { b, c }, 0, |n| trinomial_t(n, &int(b), &int(c)), 0);
            check(SequenceFamily::MotzkinM { b, c }, 0, |n| motzkin_m(n, &int(b), &int(c)), 0);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let d = SequenceFamily::DelannoyPoly;
        assert_eq!(mod_stream(&d, &int(1), 4, 1, 3).unwrap_err(), Error::NotOddPrime(4));
        assert!(matches!(
            mod_stream(&d, &int(1), 5, 1, 10).unwrap_err(),
            Error::PredicateViolated { .. }
        ));
        assert!(matches!(
            mod_stream(&SequenceFamily::RPoly, &int(1), 5, 1, 3).unwrap_err(),
            Error::UnsupportedFamily { .. }
        ));
    }

    #[test]
    fn large_prime_stream_is_fast_enough() {
        let p = 10007u64;
        let terms = mod_stream(&SequenceFamily::DelannoyPoly, &int(1), p, 2, 2 * p - 1).unwrap();
        assert_eq!(terms.len(), 2 * p as usize);
    }
}
