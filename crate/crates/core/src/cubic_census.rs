//! Closed-form integer counting of cubics `X^3 - A X^2 + A2 X - A3` with real
//! positive or nonnegative roots.
//!
//! Every count reduces to the window `G-(A2) <= A3 <= G+(A2)` with
//! `G± = (9 A A2 - 2 A^3 ± 2 D^(3/2)) / 27` and `D = A^2 - 3 A2`. Floors and
//! ceilings of `G±` are taken exactly from `floor(sqrt(4 D^3))`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::certified::{CertifiedReal, DEFAULT_PREC};
use crate::error::{domain, Result};

/// Strictly positive roots with positive coefficients, or nonnegative roots
/// with nonnegative coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Strict,
    Nonneg,
}

impl Variant {
    pub fn is_strict(self) -> bool {
        matches!(self, Variant::Strict)
    }
}

/// Window data for one `(A, A2)` row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GPair {
    pub a: BigInt,
    pub a2: BigInt,
    pub floor_gplus: BigInt,
    pub ceil_gminus: BigInt,
    pub d: BigInt,
}

/// Positive rational weights `(alpha, beta, gamma)` applied to `A`, `A2`, `A3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalScaling {
    alpha: BigRational,
    beta: BigRational,
    gamma: BigRational,
}

impl RationalScaling {
    pub fn new(alpha: BigRational, beta: BigRational, gamma: BigRational) -> Result<Self> {
        if !alpha.is_positive() || !beta.is_positive() || !gamma.is_positive() {
            return domain("scaling weights must be positive");
        }
        Ok(RationalScaling { alpha, beta, gamma })
    }

    pub fn identity() -> Self {
        let one = BigRational::one();
        RationalScaling { alpha: one.clone(), beta: one.clone(), gamma: one }
    }

    pub fn alpha(&self) -> &BigRational {
        &self.alpha
    }

    pub fn beta(&self) -> &BigRational {
        &self.beta
    }

    pub fn gamma(&self) -> &BigRational {
        &self.gamma
    }
}

fn isqrt(m: &BigInt) -> BigInt {
    m.sqrt()
}

/// Floor of the square root of a nonnegative `u128`.
fn isqrt_u128(m: u128) -> u128 {
    if m == 0 {
        return 0;
    }
    let mut r = (m as f64).sqrt() as u128;
    while r.checked_mul(r).map_or(true, |s| s > m) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|s| s <= m) {
        r += 1;
    }
    r
}

/// `(floor G+, ceil G-)` for integers with `D = A^2 - 3 A2 >= 0`.
fn g_bounds(a: &BigInt, a2: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    let d = a * a - BigInt::from(3) * a2;
    if d.is_negative() {
        return domain(format!("A^2 - 3 A2 < 0 at (A, A2) = ({a}, {a2})"));
    }
    let n = BigInt::from(9) * a * a2 - BigInt::from(2) * a * a * a;
    let x = isqrt(&(BigInt::from(4) * &d * &d * &d));
    let q = BigInt::from(27);
    let fl = (&n + &x).div_floor(&q);
    let ce = -((-&n + &x).div_floor(&q));
    Ok((fl, ce, d))
}

pub fn floor_gplus(a: i64, a2: i64) -> Result<BigInt> {
    g_bounds(&BigInt::from(a), &BigInt::from(a2)).map(|g| g.0)
}

pub fn ceil_gminus(a: i64, a2: i64) -> Result<BigInt> {
    g_bounds(&BigInt::from(a), &BigInt::from(a2)).map(|g| g.1)
}

pub fn g_pair(a: &BigInt, a2: &BigInt) -> Result<GPair> {
    let (floor_gplus, ceil_gminus, d) = g_bounds(a, a2)?;
    Ok(GPair { a: a.clone(), a2: a2.clone(), floor_gplus, ceil_gminus, d })
}

/// Row count `#{A3 >= lo : ceil G- <= A3 <= floor G+}` on the i128 path.
fn row_i128(a: i128, a2: i128, lo: i128) -> u128 {
    let d = a * a - 3 * a2;
    let n = 9 * a * a2 - 2 * a * a * a;
    let x = isqrt_u128(4 * (d as u128) * (d as u128) * (d as u128)) as i128;
    let fl = (n + x).div_euclid(27);
    let ce = -((x - n).div_euclid(27));
    let low = ce.max(lo);
    if fl >= low {
        (fl - low + 1) as u128
    } else {
        0
    }
}

fn row_big(a: &BigInt, a2: &BigInt, lo: &BigInt) -> u128 {
    let (fl, ce, _) = g_bounds(a, a2).expect("row inside the real-rooted range");
    let low = if &ce > lo { ce } else { lo.clone() };
    if fl >= low {
        (fl - low + 1u32).to_u128().expect("row count fits in u128")
    } else {
        0
    }
}

/// Largest `A` for which the i128 row arithmetic cannot overflow.
const I128_TRACE_LIMIT: i64 = 100_000;

/// `#P3+(A)`: cubics with trace `A`, `A2, A3 >= 1` and all roots real and
/// positive.
pub fn count_p3_plus(a: i64) -> u128 {
    if a < 1 {
        return 0;
    }
    let a_sq = (a as i128) * (a as i128);
    let quarter = (a_sq / 4) as i64;
    let third = (a_sq / 3) as i64;
    let row = |a2: i64| -> u128 {
        if a <= I128_TRACE_LIMIT {
            row_i128(a as i128, a2 as i128, 1)
        } else {
            row_big(&BigInt::from(a), &BigInt::from(a2), &BigInt::one())
        }
    };
    // A2 <= A^2/4: G- <= 0, so the row is floor G+. The boundary A2 = A^2/4
    // stays in this range.
    let first: u128 = (1..=quarter).into_par_iter().map(row).sum();
    let second: u128 = (quarter + 1..=third).into_par_iter().map(row).sum();
    first + second
}

/// `#P3^{0+}(A)`: tuples over the nonnegative integers with all roots real
/// and nonnegative. `A3 = 0` contributes `X (X^2 - A X + A2)` for
/// `0 <= A2 <= A^2/4`; `A3 >= 1` forces every root positive.
pub fn count_p3_zeroplus(a: i64) -> u128 {
    if a < 0 {
        return 0;
    }
    if a == 0 {
        return 1;
    }
    count_p3_plus(a) + ((a as u128) * (a as u128) / 4) + 1
}

/// Count pairs `(A2, A3)` such that `X^3 - alpha A X^2 + beta A2 X - gamma A3`
/// has all roots real and positive (`Strict`, `A2, A3 >= 1`) or nonnegative
/// (`Nonneg`, `A2, A3 >= 0`).
pub fn count_p3_scaled(a: i64, s: &RationalScaling, variant: Variant) -> u128 {
    if a < 0 || (a == 0 && variant.is_strict()) {
        return 0;
    }
    let an = s.alpha.numer() * BigInt::from(a);
    let ad = s.alpha.denom().clone();
    let (bn, bd) = (s.beta.numer(), s.beta.denom());
    let (gn, gd) = (s.gamma.numer(), s.gamma.denom());
    // Real roots need alpha^2 A^2 >= 3 beta A2.
    let top = (&an * &an * bd).div_floor(&(BigInt::from(3) * bn * &ad * &ad));
    let top = top.to_i64().expect("A2 range fits in i64");
    let start: i64 = if variant.is_strict() { 1 } else { 0 };
    let lo = BigInt::from(start);
    let q = BigInt::from(27) * gn * &ad * &ad * &ad * bd * bd;
    let ad2 = &ad * &ad;
    let row = |a2: i64| -> u128 {
        let a2 = BigInt::from(a2);
        // d = (alpha A)^2 - 3 beta A2 scaled by ad^2 bd
        let d = &an * &an * bd - BigInt::from(3) * bn * &a2 * &ad2;
        let nn = BigInt::from(9) * &an * bn * &a2 * &ad2 - BigInt::from(2) * &an * &an * &an * bd;
        let p = gd * &nn * bd;
        let m = gd * gd * BigInt::from(4) * &d * &d * &d * bd;
        let x = isqrt(&m);
        let fl = (&p + &x).div_floor(&q);
        let ce = -((-&p + &x).div_floor(&q));
        let low = if ce > lo { ce } else { lo.clone() };
        if fl >= low {
            (fl - low + 1u32).to_u128().expect("row count fits in u128")
        } else {
            0
        }
    };
    (start..=top).into_par_iter().map(row).sum()
}

/// Main term `alpha^5 A^5 / (480 beta gamma)` and the error budget
/// `alpha^3 A^3/gamma + (c/beta + 1/gamma) alpha^2 A^2 + alpha beta A/gamma`,
/// with `c = 1` for `Strict` and `c = 2` for `Nonneg`.
pub fn main_term_and_error(
    a: i64,
    s: &RationalScaling,
    variant: Variant,
) -> (BigRational, CertifiedReal) {
    let a = BigRational::from_integer(BigInt::from(a));
    let (al, be, ga) = (&s.alpha, &s.beta, &s.gamma);
    let aa = al * &a;
    let main = aa.pow(5) / (BigRational::from_integer(BigInt::from(480)) * be * ga);
    let c = BigRational::from_integer(BigInt::from(if variant.is_strict() { 1 } else { 2 }));
    let err = aa.pow(3) / ga + (c / be + ga.recip()) * aa.pow(2) + al * be * &a / ga;
    (main, CertifiedReal::exact(err))
}

/// `#P3(A, B; D)`: integers `A3` (any sign) with `X^3 - A X^2 + B X - A3`
/// real-rooted and `0 <= disc <= D`.
pub fn count_p3_bounded_disc(a: i64, b: i64, dmax: i64) -> u128 {
    let (a, b, dmax) = (BigInt::from(a), BigInt::from(b), BigInt::from(dmax));
    if dmax.is_negative() {
        return 0;
    }
    let Ok((fl, ce, d0)) = g_bounds(&a, &b) else {
        return 0;
    };
    if fl < ce {
        return 0;
    }
    let window = &fl - &ce + 1u32;
    // disc(A3) = -27 A3^2 + L A3 + K exceeds D exactly on the open interval
    // |54 A3 - L| < sqrt(E), E = 16 d0^3 - 108 D.
    let l = BigInt::from(-4) * &a * &a * &a + BigInt::from(18) * &a * &b;
    let e = BigInt::from(16) * &d0 * &d0 * &d0 - BigInt::from(108) * &dmax;
    let excluded = if e.is_positive() {
        let s = isqrt(&e);
        let t = if &s * &s == e { s - 1u32 } else { s };
        let k = BigInt::from(54);
        let hi = (&l + &t).div_floor(&k);
        let lo = -((-&l + &t).div_floor(&k));
        if hi >= lo {
            hi - lo + 1u32
        } else {
            BigInt::zero()
        }
    } else {
        BigInt::zero()
    };
    (window - excluded).to_u128().expect("nonnegative count")
}

/// Upper bounds on `#P3(A, B; D)`.
#[derive(Clone, Debug)]
pub struct W1Bound {
    /// Two-branch bound, absent when `A^2 - 3B < 0`.
    pub piecewise: Option<CertifiedReal>,
    /// `(2 / (3 sqrt 3)) sqrt D`.
    pub global: CertifiedReal,
}

pub fn w1_upper_bound(a: i64, b: i64, dmax: i64) -> Result<W1Bound> {
    if dmax < 0 {
        return domain("discriminant bound must be nonnegative");
    }
    let prec = DEFAULT_PREC;
    let dq = BigRational::from_integer(BigInt::from(dmax));
    // 2/(3 sqrt 3) sqrt D = sqrt(4 D / 27)
    let global = CertifiedReal::exact(&dq * BigRational::new(4.into(), 27.into())).sqrt(prec)?;
    let d0 = BigInt::from(a) * BigInt::from(a) - BigInt::from(3) * BigInt::from(b);
    let piecewise = if d0.is_negative() {
        None
    } else if d0.is_zero() {
        Some(CertifiedReal::zero())
    } else {
        let d0q = BigRational::from_integer(d0.clone());
        let cube = d0q.pow(3);
        let d0_32 = CertifiedReal::exact(cube.clone()).sqrt(prec)?;
        let threshold = cube * BigRational::new(4.into(), 27.into());
        Some(if dq >= threshold {
            d0_32.scale(&BigRational::new(4.into(), 27.into()))
        } else {
            CertifiedReal::exact(dq).div(&d0_32)?
        })
    };
    Ok(W1Bound { piecewise, global })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn g_window_examples() {
        assert_eq!(floor_gplus(6, 9).unwrap(), BigInt::from(4));
        assert_eq!(ceil_gminus(6, 9).unwrap(), BigInt::from(0));
        assert_eq!(floor_gplus(6, 12).unwrap(), BigInt::from(8));
        assert_eq!(ceil_gminus(6, 12).unwrap(), BigInt::from(8));
        assert_eq!(floor_gplus(6, 10).unwrap(), BigInt::from(5));
        assert_eq!(ceil_gminus(6, 10).unwrap(), BigInt::from(3));
        assert_eq!(floor_gplus(6, 1).unwrap(), BigInt::from(0));
        assert_eq!(ceil_gminus(6, 1).unwrap(), BigInt::from(-28));
        assert!(floor_gplus(6, 13).is_err());
    }

    #[test]
    fn plus_counts() {
        assert_eq!(count_p3_plus(1), 0);
        assert_eq!(count_p3_plus(3), 1);
        assert_eq!(count_p3_plus(6), 16);
    }

    #[test]
    fn zeroplus_counts() {
        assert_eq!(count_p3_zeroplus(0), 1);
        assert_eq!(count_p3_zeroplus(1), 1);
        assert_eq!(count_p3_zeroplus(3), 4);
    }

    #[test]
    fn identity_scaling_matches_plus() {
        let id = RationalScaling::identity();
        for a in 0..=20 {
            assert_eq!(count_p3_scaled(a, &id, Variant::Strict), count_p3_plus(a));
            assert_eq!(count_p3_scaled(a, &id, Variant::Nonneg), count_p3_zeroplus(a));
        }
    }

    #[test]
    fn big_and_small_rows_agree() {
        for a in [7i64, 30, 101] {
            let max = a * a / 3;
            for a2 in (1..=max).step_by(7) {
                assert_eq!(
                    row_i128(a as i128, a2 as i128, 1),
                    row_big(&BigInt::from(a), &BigInt::from(a2), &BigInt::one())
                );
            }
        }
    }

    #[test]
    fn main_term_examples() {
        let (m, e) = main_term_and_error(10, &RationalScaling::identity(), Variant::Strict);
        assert_eq!(m, q(625, 3));
        assert_eq!(e.hi(), &q(1000 + 200 + 10, 1));
    }

    #[test]
    fn bounded_disc_examples() {
        assert_eq!(count_p3_bounded_disc(3, 1, 100), 3);
        assert_eq!(count_p3_bounded_disc(3, 1, 10), 2);
        assert_eq!(count_p3_bounded_disc(2, 2, 1_000_000), 0);
        assert_eq!(count_p3_bounded_disc(3, 1, 4), 0);
        assert_eq!(count_p3_bounded_disc(3, 1, 5), 2);
    }

    #[test]
    fn w1_examples() {
        let w = w1_upper_bound(3, 1, 100).unwrap();
        let p = w.piecewise.unwrap();
        assert!((p.mid_f64() - 4.0 / 27.0 * 6f64.powf(1.5)).abs() < 1e-12);
        assert!((w.global.mid_f64() - 2.0 / (3.0 * 3f64.sqrt()) * 10.0).abs() < 1e-12);
        let z = w1_upper_bound(3, 3, 7).unwrap();
        assert!(z.piecewise.unwrap().is_point());
        assert!(w1_upper_bound(2, 2, 10).unwrap().piecewise.is_none());
    }

    #[test]
    fn isqrt_u128_edges() {
        for m in [0u128, 1, 2, 3, 4, 15, 16, 17, (1u128 << 100) - 1, 1u128 << 100] {
            let r = isqrt_u128(m);
            assert!(r * r <= m && (r + 1) * (r + 1) > m);
        }
    }
}
