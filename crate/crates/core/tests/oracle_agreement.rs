//! Fast counts against the brute-force scans in `census_core::oracle`.

use census_core::cubic_census::{
    count_p3_bounded_disc, count_p3_plus, count_p3_scaled, count_p3_zeroplus, RationalScaling,
    Variant,
};
use census_core::maclaurin::{count_attainable, count_sb, BSequence};
use census_core::oracle::*;
use census_core::robinson::{count_positive_real_monic, count_prefix3, prefix3_scaling};
use num_bigint::BigInt;
use num_rational::BigRational;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn cubic_census_matches_root_isolation() {
    for a in 1..=25 {
        assert_eq!(count_p3_plus(a), p3_plus_bruteforce(a) as u128, "A = {a}");
    }
}

#[test]
fn zeroplus_matches_root_isolation() {
    for a in 0..=12 {
        assert_eq!(count_p3_zeroplus(a), p3_zeroplus_bruteforce(a) as u128, "A = {a}");
    }
}

#[test]
fn scaled_counts_match_root_isolation() {
    let scalings = [
        RationalScaling::identity(),
        RationalScaling::new(q(3, 4), q(1, 2), q(1, 4)).unwrap(),
        RationalScaling::new(q(2, 1), q(3, 1), q(5, 2)).unwrap(),
        prefix3_scaling(5),
    ];
    for s in &scalings {
        for a in 0..=12 {
            for v in [Variant::Strict, Variant::Nonneg] {
                assert_eq!(
                    count_p3_scaled(a, s, v),
                    p3_scaled_bruteforce(a, s, v) as u128,
                    "A = {a}, {s:?}, {v:?}"
                );
            }
        }
    }
}

#[test]
fn robinson_matches_box_scan() {
    for n in 1..=4 {
        for a in 0..=8 {
            for strict in [true, false] {
                assert_eq!(
                    count_positive_real_monic(n, a, strict),
                    positive_real_monic_bruteforce(n, a, strict),
                    "n = {n}, A = {a}, strict = {strict}"
                );
            }
        }
    }
    assert_eq!(count_positive_real_monic(5, 5, true), positive_real_monic_bruteforce(5, 5, true));
}

#[test]
fn prefix3_matches_scaled_scan() {
    for n in 4..=5 {
        for a in 0..=10 {
            let s = prefix3_scaling(n);
            assert_eq!(
                count_prefix3(n, a).unwrap(),
                p3_scaled_bruteforce(a, &s, Variant::Nonneg) as u128,
                "n = {n}, A = {a}"
            );
        }
    }
}

#[test]
fn attainable_matches_nested_scan() {
    for n in 2..=5 {
        for a in 1..=9u64 {
            assert_eq!(
                count_attainable(n, a).unwrap(),
                BigInt::from(attainable_bruteforce(n, a)),
                "n = {n}, A = {a}"
            );
        }
    }
}

#[test]
fn sb_counts_match_nested_scan() {
    let seqs = [vec![q(1, 4)], vec![q(1, 4), q(2, 3)], vec![q(1, 3), q(1, 2), q(2, 7)]];
    for b in &seqs {
        let bs = BSequence::from_rationals(b).unwrap();
        for a in 1..=10 {
            assert_eq!(count_sb(a, &bs).unwrap(), BigInt::from(sb_bruteforce(a, b)), "A = {a}, B = {b:?}");
        }
    }
}

#[test]
fn bounded_disc_matches_vertex_scan() {
    for a in -10..=10 {
        for b in -10..=10 {
            for d in [0, 1, 7, 100, 1000, 100_000] {
                assert_eq!(
                    count_p3_bounded_disc(a, b, d),
                    bounded_disc_bruteforce(a, b, d) as u128,
                    "({a}, {b}, {d})"
                );
            }
        }
    }
}

#[test]
fn general_discriminant_agrees_with_cubic_formula() {
    for a in -5..=5i64 {
        for b in -5..=5i64 {
            for c in -5..=5i64 {
                let d = census_core::disc_arith::cubic_disc(a as i128, b as i128, c as i128);
                assert_eq!(cubic_disc_general(a, b, c), BigInt::from(d));
            }
        }
    }
}

#[test]
fn bounded_disc_bound_needs_two_extra_points() {
    use census_core::cubic_census::w1_upper_bound;
    let w = w1_upper_bound(3, 1, 100).unwrap();
    assert!(count_p3_bounded_disc(3, 1, 100) as f64 > w.piecewise.unwrap().hi_f64());
    let w = w1_upper_bound(3, 1, 10).unwrap();
    assert!(count_p3_bounded_disc(3, 1, 10) as f64 > w.piecewise.unwrap().hi_f64() + 1.0);
    for a in -30..=30 {
        for b in -30..=30 {
            for k in 0..=6 {
                let d = 10i64.pow(k);
                let c = count_p3_bounded_disc(a, b, d) as f64;
                let w = w1_upper_bound(a, b, d).unwrap();
                assert!(c <= w.global.hi_f64() + 2.0, "({a}, {b}, {d})");
                if let Some(p) = w.piecewise {
                    assert!(c <= p.hi_f64() + 2.0, "({a}, {b}, {d})");
                }
            }
        }
    }
}
