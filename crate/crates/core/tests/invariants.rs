use delannoy_core::exact::{
    binomial, catalan, fermat_quotient, fibonacci, int, legendre_symbol, lucas_u, narayana, odd_primes_in,
    ord_p, prime_power,
};
use delannoy_core::sequences::{self, cache};
use delannoy_core::{IntPolynomial, TrackedResidue};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

fn primes_below(n: u64) -> Vec<u64> {
    odd_primes_in(3, n - 1)
}

#[test]
fn pascal_rule() {
    for n in 1..=60u64 {
        for k in 0..=n as i64 {
            assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k), "n={n} k={k}");
        }
    }
}

#[test]
fn narayana_rows_sum_to_catalan() {
    for n in 1..=40u64 {
        let s: BigInt = (1..=n as i64).map(|k| narayana(n, k)).sum();
        assert_eq!(s, catalan(n), "n={n}");
    }
}

#[test]
fn lucas_congruences_exhaustive() {
    for p in primes_below(200) {
        let pb = BigInt::from(p);
        for a in -5i64..=5 {
            for b in -5i64..=5 {
                let delta = a * a - 4 * b;
                if delta == 0 {
                    continue;
                }
                let e = legendre_symbol(&int(delta), p).unwrap() as i64;
                let up = lucas_u(p, &int(a), &int(b));
                assert!((up - e).mod_floor(&pb).is_zero(), "u_p p={p} A={a} B={b}");
                if b % p as i64 != 0 {
                    let u = lucas_u((p as i64 - e) as u64, &int(a), &int(b));
                    assert!(u.mod_floor(&pb).is_zero(), "u_(p-e) p={p} A={a} B={b}");
                }
            }
        }
    }
}

#[test]
fn fibonacci_at_primes() {
    for p in primes_below(200).into_iter().filter(|&p| p != 5) {
        let e = legendre_symbol(&int(5), p).unwrap() as i64;
        assert!((fibonacci(p) - e).mod_floor(&BigInt::from(p)).is_zero(), "p={p}");
    }
}

#[test]
fn symmetries() {
    for n in 0..=100u64 {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let d = cache::delannoy(n);
        assert_eq!(d.reflect(), d.scale_i64(sign), "D_{n}");
        if n >= 1 {
            let s = cache::little_schroder(n);
            assert_eq!(s.reflect(), s.scale_i64(-sign), "s_{n}");
            let w = sequences::small_w_poly(n);
            assert_eq!(w.reflect(), w.scale_i64(-sign), "w_{n}");
        }
    }
}

#[test]
fn even_w_divisible_by_2x_plus_1() {
    let two_x1 = IntPolynomial::linear(2, 1);
    for n in 1..=50u64 {
        let w = sequences::small_w_poly(2 * n);
        let q = w.exact_div(&two_x1).unwrap_or_else(|e| panic!("n={n}: {e}"));
        assert_eq!(&q * &two_x1, w);
    }
}

#[test]
fn trinomial_motzkin_specialisations() {
    let one = int(1);
    let quad = IntPolynomial::from_i64s(&[1, 1, 1]);
    for n in 0..=30u64 {
        assert_eq!(sequences::trinomial_t(n, &one, &one), quad.pow(n as u32).coeff(n as usize), "T_{n}(1,1)");
    }
    for n in 0..=60u64 {
        assert_eq!(sequences::trinomial_t(n, &int(3), &int(2)), cache::delannoy(n).eval(&one), "T_{n}(3,2)");
        assert_eq!(
            sequences::motzkin_m(n, &int(3), &int(2)),
            cache::little_schroder(n + 1).eval(&one),
            "M_{n}(3,2)"
        );
    }
}

fn small_poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-50i64..=50, 0..=21).prop_map(|c| IntPolynomial::from_i64s(&c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn polynomial_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
    }
}

proptest! {
    #[test]
    fn compose_with_t_t_plus_1(p in small_poly(), t in -1000i64..1000) {
        let x = int(t);
        prop_assert_eq!(p.compose_x_xplus1().eval(&x), p.eval(&(&x * (&x + 1))));
    }

    #[test]
    fn tracked_residue_round_trip(n in -10_000_000i64..10_000_000, pi in 0usize..6, k in 1u32..5) {
        let p = [3u64, 5, 7, 11, 13, 97][pi];
        let nb = int(n);
        let t = TrackedResidue::from_integer(&nb, p, k);
        if n != 0 {
            let v = ord_p(&nb, p).unwrap();
            let m = prime_power(p, v + k);
            prop_assert_eq!(t.to_integer().mod_floor(&m), nb.mod_floor(&m));
        }
    }

    #[test]
    fn fermat_quotient_is_additive(a in 1i64..10_000, b in 1i64..10_000, pi in 0usize..24) {
        let p = primes_below(100)[pi];
        prop_assume!(a % p as i64 != 0 && b % p as i64 != 0);
        let q = |z: i64| fermat_quotient(&int(z), p, 1).unwrap().to_integer();
        let pb = BigInt::from(p);
        prop_assert!((q(a * b) - q(a) - q(b)).mod_floor(&pb).is_zero());
    }

    #[test]
    fn lucas_congruences_sampled(pi in 0usize..45, a in -50i64..=50, b in -50i64..=50) {
        let p = primes_below(200)[pi];
        let delta = a * a - 4 * b;
        prop_assume!(delta != 0);
        let e = legendre_symbol(&int(delta), p).unwrap() as i64;
        let pb = BigInt::from(p);
        prop_assert!((lucas_u(p, &int(a), &int(b)) - e).mod_floor(&pb).is_zero());
        if b % p as i64 != 0 {
            prop_assert!(lucas_u((p as i64 - e) as u64, &int(a), &int(b)).mod_floor(&pb).is_zero());
        }
    }
}
