//! Modular streams against exact values, and the three routes to the
//! `x = 1` Delannoy–Schröder sum.

use delannoy_core::congruences::{ds_sums_exact, ds_sums_stream};
use delannoy_core::exact::{int, odd_primes_in, prime_power};
use delannoy_core::sequences::{self, stream::mod_stream_residues};
use delannoy_core::SequenceFamily;
use num_bigint::BigInt;
use num_integer::Integer;

fn exact(family: &SequenceFamily, n: u64, x: &BigInt) -> BigInt {
    match family {
        SequenceFamily::DelannoyPoly => sequences::cache::delannoy(n).eval(x),
        SequenceFamily::LittleSchroderPoly => sequences::cache::little_schroder(n).eval(x),
        SequenceFamily::LargeSchroderPoly => sequences::cache::large_schroder(n).eval(x),
        SequenceFamily::BigW => sequences::big_w_poly(n).eval(x),
        SequenceFamily::SmallW => sequences::small_w_poly(n).eval(x),
        SequenceFamily::TrinomialT { b, c } => sequences::trinomial_t(n, &int(*b), &int(*c)),
        SequenceFamily::MotzkinM { b, c } => sequences::motzkin_m(n, &int(*b), &int(*c)),
        other => panic!("no stream for {other}"),
    }
}

#[test]
fn streams_match_exact_values_below_fifty() {
    let families = [
        (SequenceFamily::DelannoyPoly, 0),
        (SequenceFamily::LittleSchroderPoly, 1),
        (SequenceFamily::LargeSchroderPoly, 0),
        (SequenceFamily::BigW, 1),
        (SequenceFamily::SmallW, 1),
        (SequenceFamily::TrinomialT { b: 3, c: 2 }, 0),
        (SequenceFamily::MotzkinM { b: 1, c: 1 }, 0),
        (SequenceFamily::TrinomialT { b: -2, c: 5 }, 0),
        (SequenceFamily::MotzkinM { b: 3, c: 3 }, 0),
    ];
    for p in odd_primes_in(3, 49) {
        let n_max = 40.min(2 * p - 1);
        for k in 1..=3u32 {
            let m = prime_power(p, k);
            for x0 in -3i64..=3 {
                let x = int(x0);
                for (family, first) in &families {
                    let got = mod_stream_residues(family, &x, p, k, n_max)
                        .unwrap_or_else(|e| panic!("{family} p={p} k={k} x0={x0}: {e}"));
                    assert_eq!(got.len() as u64, n_max + 1 - first);
                    for (i, r) in got.iter().enumerate() {
                        let n = first + i as u64;
                        assert_eq!(*r, exact(family, n, &x).mod_floor(&m), "{family} p={p} k={k} x0={x0} n={n}");
                    }
                }
            }
        }
    }
}

#[test]
fn c1_12_lhs_three_ways() {
    let one = int(1);
    for p in odd_primes_in(3, 59) {
        let m = prime_power(p, 3);
        let (exact_sum, _) = ds_sums_exact(&one, p);
        let via_w = BigInt::from(p) * sequences::big_w_poly(p).eval(&int(2));
        let (streamed, _) = ds_sums_stream(&one, p, 3).unwrap();
        assert_eq!(exact_sum, via_w, "p={p}: exact sum vs p W_p(2)");
        assert_eq!(exact_sum.mod_floor(&m), streamed, "p={p}: stream");
    }
}
