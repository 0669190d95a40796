use census_core::disc_arith::*;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand::rngs::StdRng;

const PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

/// Random quadratics with a third forced into `p | A` and a third into
/// `p | gcd(A, B, C)` for a random small prime.
fn sample(rng: &mut StdRng, n: usize) -> Vec<QuadPoly> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let p = PRIMES[rng.gen_range(0..6)] as i64;
        let (mut a, mut b, mut c) =
            (rng.gen_range(-500..=500), rng.gen_range(-500..=500), rng.gen_range(-500..=500));
        match out.len() % 3 {
            1 => a *= p,
            2 => {
                a *= p;
                b *= p;
                c *= p;
            }
            _ => {}
        }
        let f = QuadPoly::new(a, b, c);
        if !f.is_zero() {
            out.push(f);
        }
    }
    out
}

#[test]
fn rho_engine_matches_brute_force() {
    let mut rng = StdRng::seed_from_u64(11);
    for f in sample(&mut rng, 500) {
        for p in PRIMES {
            assert_eq!(rho_quadratic_prime_sq(&f, p).unwrap(), rho_bruteforce(&f, p * p), "{f} at {p}");
        }
    }
}

#[test]
fn rho_is_multiplicative() {
    let mut rng = StdRng::seed_from_u64(12);
    for f in sample(&mut rng, 200) {
        for (i, &p) in PRIMES[..6].iter().enumerate() {
            for &q in &PRIMES[i + 1..8] {
                let m = p * p * q * q;
                assert_eq!(rho_bruteforce(&f, m), rho_bruteforce(&f, p * p) * rho_bruteforce(&f, q * q));
                assert_eq!(rho_squarefree_sq(&f, p * q).unwrap(), rho_bruteforce(&f, m));
            }
        }
    }
}

#[test]
fn rho_bound_on_odd_squarefree_moduli() {
    let mut rng = StdRng::seed_from_u64(13);
    for f in sample(&mut rng, 300) {
        if f.discriminant() == 0 {
            continue;
        }
        for d in [3u64, 5, 7, 15, 21, 35, 105] {
            if d.gcd(&f.a.unsigned_abs()) == 1 {
                assert!(rho_bound_holds(&f, d).unwrap(), "{f} at {d}");
            }
        }
    }
}

#[test]
fn sieve_lower_bound_and_sieve_upper_bound_hold() {
    let quads = [(1, 0, -2), (1, 1, -1), (1, 0, -3), (2, 1, -1), (1, 3, 1), (3, 1, -2)];
    for (a, b, c) in quads {
        let f = QuadPoly::new(a, b, c);
        for z in [7, 11, 13] {
            let s = squarefree_sieve_bounds(&f, 0, 5_000, z).unwrap();
            assert!(s.lower_holds(), "{f} z = {z}");
            assert!(s.upper_sieve_holds(), "{f} z = {z}");
        }
    }
}

#[test]
fn stated_upper_bound_undercounts_for_x2_minus_2() {
    let s = squarefree_sieve_bounds(&QuadPoly::new(1, 0, -2), 0, 10_000, 7).unwrap();
    assert_eq!(s.empirical, 9419);
    assert!(!s.upper_holds());
}

#[test]
fn squarefree_census_prefilter_only_skips_non_squarefree_rows() {
    for a in [3, 6, 9, 12, 15] {
        let with = census_p3_squarefree(a, true).unwrap();
        let without = census_p3_squarefree(a, false).unwrap();
        assert_eq!(with.count, without.count);
        assert_eq!(with.members, without.members);
        assert!(with.skipped > 0);
    }
}

#[test]
fn square_pair_counts() {
    for h in 2..=120 {
        assert_eq!(count_square_pairs(h).unwrap(), count_square_pairs_naive(h));
    }
}
