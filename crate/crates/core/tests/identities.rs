//! Property tests for the algebraic identities tying the modules together.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use wps_core::arith::{integer, ratio};
use wps_core::classify::{hitchin_thorpe_obstructed, EinsteinTag};
use wps_core::orbifold::{ht_deficit, weight_ratio_sum};
use wps_core::{
    bk_yamabe_energy, einstein_status, mod_inverse, pi_surd_compare, pi_surd_to_float,
    rademacher_residual, singular_points, topology_report, yamabe_report, PiSurd, Rational,
    Weights,
};

/// Sorted, pairwise coprime triples with entries up to `max`.
fn weights(max: u64) -> impl Strategy<Value = Weights> {
    (1..=max, 1..=max, 1..=max).prop_filter_map("not pairwise coprime", |(a, b, c)| {
        let mut t = [a, b, c];
        t.sort_unstable();
        Weights::new(t[0], t[1], t[2]).ok()
    })
}

/// Unsorted pairwise coprime triple; later entries are bumped until coprime.
fn coprime_triple(max: u64) -> impl Strategy<Value = (u64, u64, u64)> {
    (1..=max, 1..=max, 1..=max).prop_map(|(r, mut q, mut p)| {
        while r.gcd(&q) != 1 {
            q += 1;
        }
        while (r * q).gcd(&p) != 1 {
            p += 1;
        }
        (r, q, p)
    })
}

fn rational() -> impl Strategy<Value = Rational> {
    (-10_000i64..10_000, 1i64..10_000).prop_map(|(n, d)| ratio(n, d))
}

fn pi_surd() -> impl Strategy<Value = PiSurd> {
    (1i64..500, 1i64..500, 0i64..500, 1i64..500)
        .prop_map(|(cn, cd, rn, rd)| PiSurd::new(ratio(cn, cd), ratio(rn, rd)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn mod_inverse_is_an_inverse(a in 1i64..1_000_000_000, n in 2i64..1_000_000_000) {
        prop_assume!(a.gcd(&n) == 1);
        let x = mod_inverse(&BigInt::from(a), &BigInt::from(n)).unwrap();
        prop_assert!(!x.is_negative() && x < BigInt::from(n));
        prop_assert_eq!((BigInt::from(a) * x) % n, BigInt::from(1));
    }

    #[test]
    fn rational_add_sub_round_trip(a in rational(), b in rational()) {
        prop_assert_eq!((&a + &b) - &b, a);
    }

    #[test]
    fn compare_consistent_with_float(x in pi_surd(), y in pi_surd()) {
        let (fx, fy) = (pi_surd_to_float(&x), pi_surd_to_float(&y));
        let scale = fx.abs().max(fy.abs()).max(f64::MIN_POSITIVE);
        match pi_surd_compare(&x, &y) {
            Ordering::Less => prop_assert!(fx < fy || (fy - fx).abs() <= 1e-9 * scale),
            Ordering::Greater => prop_assert!(fx > fy || (fy - fx).abs() <= 1e-9 * scale),
            Ordering::Equal => prop_assert!((fy - fx).abs() <= 1e-9 * scale),
        }
    }

    #[test]
    fn rademacher_vanishes((r, q, p) in coprime_triple(1_000_000_000)) {
        let res = rademacher_residual(&BigInt::from(r), &BigInt::from(q), &BigInt::from(p)).unwrap();
        prop_assert!(res.is_zero());
    }

    #[test]
    fn decompositions_hold(w in weights(100_000)) {
        let t = topology_report(&w);
        prop_assert_eq!(&t.euler_curvature_term + &t.euler_singular_term, integer(3));
        prop_assert_eq!(t.signature_eta_term.clone(), weight_ratio_sum(&w) / integer(3) - integer(1));
        let sum = w.r() + w.q() + w.p();
        prop_assert_eq!(&t.c1_squared * integer(w.r() * w.q() * w.p()), integer(&sum * &sum));
        let e = w.excess();
        prop_assert_eq!(
            &t.ht_deficit * integer(w.r() * w.q() * w.p()),
            integer(BigInt::from(4) * w.q() * w.r() - &e * &e)
        );
    }

    #[test]
    fn deficit_sign_matches_region(w in weights(5_000)) {
        let e = w.excess();
        let below = e <= BigInt::zero() || &e * &e < BigInt::from(4) * w.q() * w.r();
        prop_assert_eq!(ht_deficit(&w).is_positive(), below);
        prop_assert_eq!(hitchin_thorpe_obstructed(&w), !below);
    }

    #[test]
    fn singular_point_count(w in weights(1_000)) {
        let expected = [w.r(), w.q(), w.p()].iter().filter(|x| **x > &BigInt::from(1)).count();
        prop_assert_eq!(singular_points(&w).len(), expected);
    }

    #[test]
    fn yamabe_upper_is_bk_energy(w in weights(100_000)) {
        let y = yamabe_report(&w);
        prop_assert_eq!(pi_surd_compare(&y.upper, &bk_yamabe_energy(&w)), Ordering::Equal);
        if y.effective_linear {
            prop_assert!(y.effective_exact);
        }
        if let Some(lower) = &y.lower {
            prop_assert_ne!(pi_surd_compare(lower, &y.reported_upper), Ordering::Greater);
        }
    }

    #[test]
    fn obstructed_iff_nonpositive_deficit(w in weights(100_000)) {
        let obstructed = einstein_status(&w).tag == EinsteinTag::Obstructed;
        prop_assert_eq!(obstructed, !ht_deficit(&w).is_positive());
    }

    #[test]
    fn json_round_trips(w in weights(10_000)) {
        let c = wps_core::classify(&w);
        let s = serde_json::to_string(&c).unwrap();
        let back: wps_core::Classification = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, c);
    }
}

#[test]
fn status_partition_is_exhaustive() {
    for p in 1u64..=120 {
        for q in 1..=p {
            for r in 1..=q {
                let Ok(w) = Weights::new(r, q, p) else {
                    continue;
                };
                let e = w.excess();
                let four_qr = BigInt::from(4) * w.q() * w.r();
                let conditions = [
                    (r, q, p) == (1, 1, 1),
                    e.is_negative() && (r, q, p) != (1, 1, 1),
                    !e.is_negative() && &e * &e >= four_qr,
                    !e.is_negative() && &e * &e < four_qr,
                ];
                assert_eq!(conditions.iter().filter(|c| **c).count(), 1, "{w}");
                let expected = [
                    EinsteinTag::KaehlerEinsteinExists,
                    EinsteinTag::EinsteinExists,
                    EinsteinTag::Obstructed,
                    EinsteinTag::Unknown,
                ][conditions.iter().position(|c| *c).unwrap()];
                assert_eq!(einstein_status(&w).tag, expected, "{w}");
            }
        }
    }
}
