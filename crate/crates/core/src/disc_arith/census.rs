//! Discriminant censuses of cubics and the counts behind them.

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use rayon::prelude::*;

use super::arith::{is_squarefree, omega, totients};
use crate::certified::{rat, CertifiedReal};
use crate::cubic_census::{ceil_gminus, floor_gplus};
use crate::error::{domain, Result};

/// Discriminant of `X^3 - A X^2 + B X - C`.
pub fn cubic_disc(a: i128, b: i128, c: i128) -> i128 {
    -27 * c * c + (-4 * a * a * a + 18 * a * b) * c + a * a * b * b - 4 * b * b * b
}

/// Square-free-discriminant members of the positive-rooted cubic census.
#[derive(Clone, Debug)]
pub struct SquarefreeCensus {
    pub count: u64,
    /// Members of the census altogether.
    pub members: u64,
    /// Members skipped because `3 | A` and `3 | A_2`.
    pub skipped: u64,
    /// `count / A^5`.
    pub ratio: CertifiedReal,
}

/// Count members `X^3 - A X^2 + A_2 X - A_3` with positive roots whose
/// discriminant is square-free. With `prefilter`, rows with `3 | A` and
/// `3 | A_2` are skipped without factoring (their discriminants are
/// divisible by 27).
pub fn census_p3_squarefree(a: i64, prefilter: bool) -> Result<SquarefreeCensus> {
    if a < 1 {
        return domain("A must be positive");
    }
    let rows: Vec<Result<(u64, u64, u64)>> = (1..=a * a / 3)
        .into_par_iter()
        .map(|a2| {
            let hi = floor_gplus(a, a2)?;
            let lo = ceil_gminus(a, a2)?;
            let hi: i64 = hi.try_into().expect("row bound fits in i64");
            let lo: i64 = lo.try_into().expect("row bound fits in i64");
            let lo = lo.max(1);
            if hi < lo {
                return Ok((0, 0, 0));
            }
            let members = (hi - lo + 1) as u64;
            if prefilter && a % 3 == 0 && a2 % 3 == 0 {
                return Ok((0, members, members));
            }
            let mut count = 0;
            for a3 in lo..=hi {
                let d = cubic_disc(a as i128, a2 as i128, a3 as i128);
                if d != 0 && is_squarefree(d)? {
                    count += 1;
                }
            }
            Ok((count, members, 0))
        })
        .collect();
    let (mut count, mut members, mut skipped) = (0, 0, 0);
    for r in rows {
        let (c, m, s) = r?;
        count += c;
        members += m;
        skipped += s;
    }
    let a5 = BigInt::from(a).pow(5);
    let ratio = CertifiedReal::exact(BigRational::new(count.into(), a5));
    Ok(SquarefreeCensus { count, members, skipped, ratio })
}

pub fn count_p3_squarefree_plus(a: i64) -> Result<(u64, CertifiedReal)> {
    let c = census_p3_squarefree(a, true)?;
    Ok((c.count, c.ratio))
}

/// `A^2 - 3B` is a perfect square.
pub fn is_square_pair(a: i64, b: i64) -> bool {
    let v = a as i128 * a as i128 - 3 * b as i128;
    v >= 0 && {
        let r = v.sqrt();
        r * r == v
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlmostPrimeCount {
    pub count: u64,
    /// `A^2 - 3B` is not a square, the hypothesis of the growth result.
    pub hypothesis_holds: bool,
}

/// `#{C in [-H, H] : Delta != 0, omega(Delta) <= k}` for
/// `X^3 - A X^2 + B X - C`.
pub fn count_almost_prime_disc(a: i64, b: i64, h: i64, k: u32) -> Result<AlmostPrimeCount> {
    if h < 2 {
        return domain("H must be at least 2");
    }
    let mut count = 0;
    for c in -h..=h {
        let d = cubic_disc(a as i128, b as i128, c as i128);
        if d != 0 && omega(d)? <= k {
            count += 1;
        }
    }
    Ok(AlmostPrimeCount { count, hypothesis_holds: !is_square_pair(a, b) })
}

/// The same count over the whole box `A, B, C in [-H, H]`.
pub fn count_almost_prime_disc_box(h: i64, k: u32) -> Result<u64> {
    if h < 2 {
        return domain("H must be at least 2");
    }
    let rows: Vec<Result<u64>> = (-h..=h)
        .into_par_iter()
        .map(|a| {
            let mut count = 0;
            for b in -h..=h {
                for c in -h..=h {
                    let d = cubic_disc(a as i128, b as i128, c as i128);
                    if d != 0 && omega(d)? <= k {
                        count += 1;
                    }
                }
            }
            Ok(count)
        })
        .collect();
    rows.into_iter().sum()
}

/// `#{(A, B) in [-H, H]^2 : A^2 - 3B is a square}`, summing over `A` the
/// `Z >= 0` with `Z^2 = A^2 (mod 3)` and `|A^2 - Z^2| <= 3H`.
pub fn count_square_pairs(h: i64) -> Result<u64> {
    if h < 2 {
        return domain("H must be at least 2");
    }
    let h = h as i128;
    let mut total = 0u64;
    for a in -h..=h {
        let a2 = a * a;
        let lo_sq = (a2 - 3 * h).max(0);
        let mut lo = lo_sq.sqrt();
        if lo * lo < lo_sq {
            lo += 1;
        }
        let hi = (a2 + 3 * h).sqrt();
        if hi < lo {
            continue;
        }
        // Z^2 = A^2 mod 3 exactly when 3 | Z matches 3 | A
        let multiples = hi / 3 - (lo + 2) / 3 + 1;
        let n = if a % 3 == 0 { multiples } else { hi - lo + 1 - multiples };
        total += n as u64;
    }
    Ok(total)
}

pub fn count_square_pairs_naive(h: i64) -> u64 {
    let mut total = 0;
    for a in -h..=h {
        for b in -h..=h {
            if is_square_pair(a, b) {
                total += 1;
            }
        }
    }
    total
}

/// `sum_{n <= N, n = r (mod 3)} phi(n)`.
pub fn phi_sum_mod3(n: u64, r: u32) -> Result<BigInt> {
    if n < 1 || r > 2 {
        return domain("need N >= 1 and a residue in 0..3");
    }
    let phi = totients(n as usize);
    let s: u128 = (1..=n as usize)
        .filter(|&i| i % 3 == r as usize)
        .map(|i| phi[i] as u128)
        .sum();
    Ok(BigInt::from(s))
}

/// Leading constant of `phi_sum_mod3`: `3/(4 pi^2)` for `r = 0` and
/// `9/(8 pi^2)` otherwise.
pub fn phi_sum_constant(r: u32, prec: u32) -> CertifiedReal {
    let pi2 = CertifiedReal::pi(prec).powi(2);
    let c = if r == 0 { rat(3, 4) } else { rat(9, 8) };
    CertifiedReal::exact(c).div(&pi2).expect("pi^2 is positive").round(prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_census_small() {
        assert_eq!(count_p3_squarefree_plus(3).unwrap().0, 0);
        let c = census_p3_squarefree(6, true).unwrap();
        assert_eq!(c.members, 16);
        assert_eq!(c.count, census_p3_squarefree(6, false).unwrap().count);
    }

    #[test]
    fn square_pairs_fast_equals_naive() {
        for h in 2..=60 {
            assert_eq!(count_square_pairs(h).unwrap(), count_square_pairs_naive(h), "H = {h}");
        }
    }

    #[test]
    fn phi_sums() {
        assert_eq!(phi_sum_mod3(10, 0).unwrap(), BigInt::from(10));
        assert_eq!(phi_sum_mod3(10, 1).unwrap(), BigInt::from(13));
        let c = phi_sum_constant(0, 64);
        assert!((c.mid_f64() - 0.0759909).abs() < 1e-6);
    }

    #[test]
    fn almost_prime_fixed_pair() {
        // Delta(C) = 4 - 27 C^2 for (A, B) = (0, -1)
        assert_eq!(cubic_disc(0, -1, 2), 4 - 108);
        let r = count_almost_prime_disc(0, -1, 10, 2).unwrap();
        assert!(r.hypothesis_holds);
        assert!(!count_almost_prime_disc(0, 0, 10, 2).unwrap().hypothesis_holds);
    }
}
