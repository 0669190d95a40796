//! Brute-force reference counts. Each routine scans a box derived from
//! elementary inequalities and decides membership through exact root
//! isolation or direct comparison, sharing no counting formula with the
//! fast paths it checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;

use crate::cubic_census::{RationalScaling, Variant};
use crate::polycore::{all_roots_real, all_roots_real_nonneg, all_roots_real_positive};
use crate::polycore::{IntPoly, MonicIntPoly};
use crate::robinson::binomial;

fn monic(a: &[i64]) -> MonicIntPoly {
    MonicIntPoly::from_i64(a).expect("nonempty")
}

/// `#P3+(A)` by scanning `1 <= A2 <= A^2/3`, `1 <= A3 <= A2^2/(3A)` (Newton's
/// inequality `e2^2 >= 3 e1 e3`) through the Sturm decision.
pub fn p3_plus_bruteforce(a: i64) -> u64 {
    if a < 1 {
        return 0;
    }
    (1..=a * a / 3)
        .into_par_iter()
        .map(|a2| {
            (1..=a2 * a2 / (3 * a))
                .filter(|&a3| all_roots_real_positive(&monic(&[a, a2, a3]), true))
                .count() as u64
        })
        .sum()
}

fn floor_q(q: &BigRational) -> i64 {
    q.numer().div_floor(q.denom()).to_i64().expect("bound fits in i64")
}

/// Scaled cubic count by scanning the box `beta A2 <= (alpha A)^2/3`,
/// `gamma A3 <= (alpha A/3)^3` through the Sturm decision.
pub fn p3_scaled_bruteforce(a: i64, s: &RationalScaling, variant: Variant) -> u64 {
    let e1 = s.alpha() * BigRational::from_integer(a.into());
    if e1.is_negative() {
        return 0;
    }
    let top2 = floor_q(&(&e1 * &e1 / (BigRational::from_integer(3.into()) * s.beta())));
    let top3 = floor_q(&((&e1 / BigRational::from_integer(3.into())).pow(3) / s.gamma()));
    let start = if variant.is_strict() { 1 } else { 0 };
    (start..=top2.max(start - 1))
        .into_par_iter()
        .map(|a2| {
            (start..=top3)
                .filter(|&a3| {
                    let c = [
                        -(s.gamma() * BigRational::from_integer(a3.into())),
                        s.beta() * BigRational::from_integer(a2.into()),
                        -e1.clone(),
                        BigRational::one(),
                    ];
                    all_roots_real_nonneg(&IntPoly::from_rational(&c), variant.is_strict())
                })
                .count() as u64
        })
        .sum()
}

/// Degree-`n` monic integer polynomials with trace `a` and all roots real
/// and positive (or nonnegative), scanning `0 <= A_k <= C(n,k) (A/n)^k`.
pub fn positive_real_monic_bruteforce(n: usize, a: i64, strict: bool) -> u64 {
    if n == 0 || a < 0 {
        return 0;
    }
    let caps: Vec<i64> = (2..=n)
        .map(|k| {
            let c = binomial(n as u64, k as u64) * BigInt::from(a).pow(k as u32);
            c.div_floor(&BigInt::from(n).pow(k as u32)).to_i64().expect("cap fits in i64")
        })
        .collect();
    let start = if strict { 1 } else { 0 };
    fn rec(prefix: &mut Vec<i64>, caps: &[i64], start: i64, strict: bool) -> u64 {
        let k = prefix.len() - 1;
        if k == caps.len() {
            return u64::from(all_roots_real_positive(&monic(prefix), strict));
        }
        let mut total = 0;
        for v in start..=caps[k] {
            prefix.push(v);
            total += rec(prefix, caps, start, strict);
            prefix.pop();
        }
        total
    }
    rec(&mut vec![a], &caps, start, strict)
}

/// `#P3(A1, A2)`: integers `A3` with `X^3 - A1 X^2 + A2 X - A3` real-rooted.
/// Scans outward from the vertex of the discriminant in `A3` and confirms
/// every candidate with a Sturm count.
pub fn p3_pair_bruteforce(a1: i64, a2: i64) -> u64 {
    let disc = |a3: i64| -> i128 {
        let (a, b, c) = (a1 as i128, a2 as i128, a3 as i128);
        -27 * c * c + (-4 * a * a * a + 18 * a * b) * c + a * a * b * b - 4 * b * b * b
    };
    let vertex = Integer::div_floor(&(-4 * (a1 as i128).pow(3) + 18 * a1 as i128 * a2 as i128), &54) as i64;
    let real = |a3: i64| all_roots_real(&IntPoly::from_i64(&[-a3, a2, -a1, 1]));
    let mut count = 0;
    for start in [vertex, vertex + 1] {
        let step = if start == vertex { -1 } else { 1 };
        let mut a3 = start;
        while disc(a3) >= 0 || (a3 - vertex).abs() <= 1 {
            count += u64::from(real(a3));
            a3 += step;
        }
    }
    count
}

/// `#P3(A, B; D)` by scanning `A3` outward from the vertex of the
/// discriminant while it stays nonnegative.
pub fn bounded_disc_bruteforce(a: i64, b: i64, dmax: i64) -> u64 {
    let (ai, bi) = (a as i128, b as i128);
    let disc = |c: i128| -27 * c * c + (-4 * ai * ai * ai + 18 * ai * bi) * c + ai * ai * bi * bi - 4 * bi * bi * bi;
    let vertex = Integer::div_floor(&(-4 * ai * ai * ai + 18 * ai * bi), &54);
    let mut count = 0;
    for (start, step) in [(vertex, -1i128), (vertex + 1, 1)] {
        let mut c = start;
        while disc(c) >= 0 || (c - vertex).abs() <= 1 {
            let d = disc(c);
            if d >= 0 && d <= dmax as i128 {
                count += 1;
            }
            c += step;
        }
    }
    count
}

/// `#S_n(A)` by nested scans that stop at the first failing comparison of
/// `A_{k+1}^k C(n,k)^(k+1)` against `A_k^(k+1) C(n,k+1)^k`.
pub fn attainable_bruteforce(n: usize, a: u64) -> u64 {
    let c: Vec<BigInt> = (0..=n as u64).map(|k| binomial(n as u64, k)).collect();
    let ok = |k: usize, x: &BigInt, y: &BigInt| {
        let k32 = k as u32;
        y.pow(k32) * c[k].pow(k32 + 1) <= x.pow(k32 + 1) * c[k + 1].pow(k32)
    };
    fn rec(k: usize, x: &BigInt, n: usize, ok: &dyn Fn(usize, &BigInt, &BigInt) -> bool) -> u64 {
        if k == n {
            return 1;
        }
        let mut total = 0;
        let mut y = BigInt::one();
        while ok(k, x, &y) {
            total += rec(k + 1, &y, n, ok);
            y += 1u32;
        }
        total
    }
    rec(1, &BigInt::from(a), n, &ok)
}

/// `#S_B(A)` for rational `B_k = p/q` by nested scans against
/// `q^k A_{k+1}^k <= p^k A_k^(k+1)`.
pub fn sb_bruteforce(a: u64, b: &[BigRational]) -> u64 {
    fn rec(k: usize, x: &BigInt, b: &[BigRational]) -> u64 {
        if k > b.len() {
            return 1;
        }
        let bk = &b[k - 1];
        let k32 = k as u32;
        let mut total = 0;
        let mut y = BigInt::one();
        while bk.denom().pow(k32) * y.pow(k32) <= bk.numer().pow(k32) * x.pow(k32 + 1) {
            total += rec(k + 1, &y, b);
            y += 1u32;
        }
        total
    }
    if b.iter().any(|v| !v.is_positive()) {
        return 0;
    }
    rec(1, &BigInt::from(a), b)
}

/// Cubic discriminant computed through the resultant-based general routine.
pub fn cubic_disc_general(a: i64, b: i64, c: i64) -> BigInt {
    crate::polycore::discriminant(&IntPoly::from_i64(&[-c, b, -a, 1])).expect("cubic")
}

/// The zero-padded version of `p3_plus_bruteforce` over nonnegative
/// coefficients and nonnegative roots.
pub fn p3_zeroplus_bruteforce(a: i64) -> u64 {
    if a < 0 {
        return 0;
    }
    (0..=a * a / 3)
        .map(|a2| {
            let top = if a == 0 { 0 } else { a2 * a2 / (3 * a) };
            (0..=top)
                .filter(|&a3| all_roots_real_positive(&monic(&[a, a2, a3]), false))
                .count() as u64
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn spot_values() {
        assert_eq!(p3_plus_bruteforce(1), 0);
        assert_eq!(p3_plus_bruteforce(3), 1);
        assert_eq!(p3_plus_bruteforce(6), 16);
        assert_eq!(p3_pair_bruteforce(0, 0), 1);
        assert_eq!(p3_pair_bruteforce(0, 1), 0);
        assert_eq!(attainable_bruteforce(3, 6), 39);
        assert_eq!(attainable_bruteforce(3, 2), 0);
        assert_eq!(bounded_disc_bruteforce(3, 1, 100), 3);
        assert!(BigInt::zero() < cubic_disc_general(6, 11, 6));
    }
}
