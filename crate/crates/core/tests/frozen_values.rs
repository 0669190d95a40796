//! Values computed once by independent brute force and frozen here.

use census_core::cubic_census::{count_p3_plus, count_p3_scaled, RationalScaling, Variant};
use census_core::disc_arith::*;
use census_core::maclaurin::{count_attainable, phi_psi_binomial};
use census_core::robinson::count_prefix3;
use num_bigint::BigInt;
use num_rational::BigRational;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn cubic_counts() {
    assert_eq!(count_p3_plus(1), 0);
    assert_eq!(count_p3_plus(3), 1);
    assert_eq!(count_p3_plus(6), 16);
    let s = RationalScaling::new(q(3, 4), q(1, 2), q(1, 4)).unwrap();
    assert_eq!(count_p3_scaled(4, &s, Variant::Nonneg), 8);
    assert_eq!(count_prefix3(4, 4).unwrap(), 8);
}

#[test]
fn attainable_counts() {
    assert_eq!(count_attainable(3, 6).unwrap(), BigInt::from(39));
    assert_eq!(count_attainable(3, 3).unwrap(), BigInt::from(1));
    assert_eq!(count_attainable(3, 2).unwrap(), BigInt::from(0));
    for a in 1..=50u64 {
        assert_eq!(count_attainable(2, a).unwrap(), BigInt::from(a * a / 4));
    }
}

#[test]
fn leading_constants() {
    assert_eq!(phi_psi_binomial(2).unwrap().0, q(1, 4));
    assert_eq!(phi_psi_binomial(3).unwrap().0, q(2, 405));
    assert_eq!(phi_psi_binomial(4).unwrap().0, q(1, 114_688));
}

#[test]
fn discriminant_censuses() {
    assert_eq!(count_squarefree_values(&QuadPoly::new(1, 0, 1), 0, 100).unwrap(), 88);
    assert_eq!(count_almost_prime_disc(0, -1, 10, 2).unwrap().count, 21);
    assert_eq!(count_almost_prime_disc_box(10, 2).unwrap(), 6058);
    let c = census_p3_squarefree(6, false).unwrap();
    assert_eq!((c.members, c.count), (16, 5));
    assert_eq!(phi_sum_mod3(10, 0).unwrap(), BigInt::from(10));
    assert_eq!(phi_sum_mod3(10, 1).unwrap(), BigInt::from(13));
}
