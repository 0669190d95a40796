//! Certified real numbers: closed intervals with rational endpoints.
//!
//! Every transcendental or irrational value used by the census (roots of
//! integers, `e^7`, logarithms, `pi`, infinite prime products) is carried as
//! an interval `[lo, hi]` that is guaranteed to contain the true value.
//! Endpoints are rounded outward to dyadic rationals with a caller-supplied
//! number of significant bits, so interval sizes stay bounded while the
//! enclosure property is never lost.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{CensusError, Result};

/// Working precision used when the caller has no particular requirement.
pub const DEFAULT_PREC: u32 = 128;

/// Upper limit for precision doubling in [`resolve_cmp`].
pub const MAX_PREC: u32 = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CertifiedReal {
    lo: BigRational,
    hi: BigRational,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn floor_rat(q: &BigRational) -> BigInt {
    q.numer().div_floor(q.denom())
}

pub fn ceil_rat(q: &BigRational) -> BigInt {
    -((-q.numer()).div_floor(q.denom()))
}

/// Round `q` down to a dyadic rational with about `prec` significant bits.
pub fn round_down(q: &BigRational, prec: u32) -> BigRational {
    if q.is_zero() {
        return q.clone();
    }
    let e = q.numer().bits() as i64 - q.denom().bits() as i64;
    let s = prec as i64 - e;
    if s >= 0 {
        let den_pow = BigInt::one() << (s as u64);
        if q.denom().is_one() || (q.denom() <= &den_pow && (&den_pow % q.denom()).is_zero()) {
            return q.clone();
        }
        let scaled = (q.numer() << (s as u64)).div_floor(q.denom());
        BigRational::new(scaled, den_pow)
    } else {
        let d = q.denom() << ((-s) as u64);
        let scaled = q.numer().div_floor(&d);
        BigRational::from_integer(scaled << ((-s) as u64))
    }
}

pub fn round_up(q: &BigRational, prec: u32) -> BigRational {
    -round_down(&-q, prec)
}

/// Largest `r` with `r^k <= m`; `m` must be nonnegative.
fn iroot(m: &BigInt, k: u32) -> BigInt {
    debug_assert!(!m.is_negative());
    if k == 1 {
        m.clone()
    } else {
        m.nth_root(k)
    }
}

/// Lower and upper dyadic bounds on `q^(1/k)` for `q >= 0`.
fn root_bounds(q: &BigRational, k: u32, prec: u32) -> (BigRational, BigRational) {
    assert!(!q.is_negative(), "root of a negative number");
    if q.is_zero() {
        return (q.clone(), q.clone());
    }
    let shrink = (q.denom().bits() as i64 - q.numer().bits() as i64).max(0) / k as i64;
    let s = prec as u64 + shrink as u64 + 2;
    let scale = BigInt::one() << s;
    let num = q.numer() << (s * k as u64);
    let (val, rem) = num.div_rem(q.denom());
    let r = iroot(&val, k);
    let lo = BigRational::new(r.clone(), scale.clone());
    let exact = rem.is_zero() && r.pow(k) == val;
    let hi = if exact {
        lo.clone()
    } else {
        BigRational::new(r + 1u32, scale)
    };
    (lo, hi)
}

/// Series for `exp(x)` with `0 <= x`; the returned interval contains `exp(x)`.
fn exp_nonneg(x: &BigRational, prec: u32) -> (BigRational, BigRational) {
    let eps = BigRational::new(BigInt::one(), BigInt::one() << (prec as u64 + 8));
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    let mut j: u64 = 0;
    let two_x = x * int(2);
    loop {
        sum += &term;
        j += 1;
        term = term * x / int(j);
        let tail_ok = int(j + 1) > two_x;
        if tail_ok && term <= &eps * &sum {
            break;
        }
    }
    // Remaining tail is at most term / (1 - x/(j+1)) <= 2 * term.
    let hi = &sum + &term * int(2);
    (round_down(&sum, prec), round_up(&hi, prec))
}

/// `2 * atanh(y)` for `|y| <= 1/2`, enclosed.
fn two_atanh(y: &BigRational, prec: u32) -> (BigRational, BigRational) {
    let eps = BigRational::new(BigInt::one(), BigInt::one() << (prec as u64 + 8));
    let y2 = y * y;
    let mut pow = y.clone();
    let mut sum = BigRational::zero();
    let mut j: u64 = 0;
    loop {
        let term = &pow / int(2 * j + 1);
        sum += &term;
        j += 1;
        pow = &pow * &y2;
        if pow.abs() <= eps {
            break;
        }
    }
    // Tail bounded by |y|^(2j+1) / ((2j+1)(1 - y^2)).
    let tail = pow.abs() / int(2 * j + 1) / (BigRational::one() - &y2);
    let (lo, hi) = if y.is_negative() {
        (&sum - &tail, sum.clone())
    } else {
        (sum.clone(), &sum + &tail)
    };
    (round_down(&(lo * int(2)), prec), round_up(&(hi * int(2)), prec))
}

/// `atan(1/m)` for integer `m >= 2` by the alternating series.
fn atan_inv(m: u64, prec: u32) -> (BigRational, BigRational) {
    let eps = BigRational::new(BigInt::one(), BigInt::one() << (prec as u64 + 8));
    let m2 = int(m * m);
    let mut pow = rat(1, m as i64);
    let mut sum = BigRational::zero();
    let mut j: u64 = 0;
    loop {
        let term = &pow / int(2 * j + 1);
        if j % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        j += 1;
        pow = &pow / &m2;
        let next = &pow / int(2 * j + 1);
        if next <= eps {
            let other = if j % 2 == 0 { &sum + &next } else { &sum - &next };
            let (lo, hi) = if other < sum { (other, sum) } else { (sum, other) };
            return (round_down(&lo, prec), round_up(&hi, prec));
        }
    }
}

impl CertifiedReal {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "certified interval with lo > hi");
        CertifiedReal { lo, hi }
    }

    pub fn exact(q: BigRational) -> Self {
        CertifiedReal {
            lo: q.clone(),
            hi: q,
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::exact(int(n))
    }

    pub fn zero() -> Self {
        Self::exact(BigRational::zero())
    }

    pub fn one() -> Self {
        Self::exact(BigRational::one())
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn contains_interval(&self, other: &CertifiedReal) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Outward rounding of both endpoints to `prec` significant bits.
    pub fn round(&self, prec: u32) -> Self {
        CertifiedReal {
            lo: round_down(&self.lo, prec),
            hi: round_up(&self.hi, prec),
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let a = &self.lo * q;
        let b = &self.hi * q;
        if a <= b {
            CertifiedReal { lo: a, hi: b }
        } else {
            CertifiedReal { lo: b, hi: a }
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.lo <= BigRational::zero() && self.hi >= BigRational::zero() {
            return Err(CensusError::Domain(
                "reciprocal of an interval containing zero".into(),
            ));
        }
        Ok(CertifiedReal {
            lo: self.hi.recip(),
            hi: self.lo.recip(),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    pub fn powi(&self, e: u32) -> Self {
        let mut acc = CertifiedReal::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        if e % 2 == 0 && self.lo.is_negative() && self.hi.is_positive() {
            // even power of an interval straddling zero
            acc.lo = BigRational::zero();
        }
        acc
    }

    /// Enclosure of the principal `k`-th root; the interval must be nonnegative.
    pub fn root(&self, k: u32, prec: u32) -> Result<Self> {
        if self.lo.is_negative() {
            return Err(CensusError::Domain("root of a possibly negative value".into()));
        }
        let (lo, _) = root_bounds(&self.lo, k, prec);
        let (_, hi) = root_bounds(&self.hi, k, prec);
        Ok(CertifiedReal { lo, hi })
    }

    pub fn sqrt(&self, prec: u32) -> Result<Self> {
        self.root(2, prec)
    }

    /// `q^(num/den)` for a positive rational base.
    pub fn pow_rational(base: &BigRational, num: i64, den: u32, prec: u32) -> Result<Self> {
        if !base.is_positive() {
            return Err(CensusError::Domain("rational power of a nonpositive base".into()));
        }
        let p = num.unsigned_abs();
        let mut powered = BigRational::one();
        for _ in 0..p {
            powered *= base;
        }
        if num < 0 {
            powered = powered.recip();
        }
        CertifiedReal::exact(powered).root(den, prec)
    }

    pub fn exp_rational(x: &BigRational, prec: u32) -> Self {
        if x.is_negative() {
            let (lo, hi) = exp_nonneg(&-x, prec);
            return CertifiedReal {
                lo: round_down(&hi.recip(), prec),
                hi: round_up(&lo.recip(), prec),
            };
        }
        let (lo, hi) = exp_nonneg(x, prec);
        CertifiedReal { lo, hi }
    }

    pub fn ln2(prec: u32) -> Self {
        let (lo, hi) = two_atanh(&rat(1, 3), prec);
        CertifiedReal { lo, hi }
    }

    /// Natural logarithm of a positive rational.
    pub fn ln_rational(q: &BigRational, prec: u32) -> Result<Self> {
        if !q.is_positive() {
            return Err(CensusError::Domain("logarithm of a nonpositive value".into()));
        }
        if q.is_one() {
            return Ok(CertifiedReal::zero());
        }
        let k = q.numer().bits() as i64 - q.denom().bits() as i64;
        let two_k = if k >= 0 {
            int(BigInt::one() << (k as u64))
        } else {
            int(BigInt::one() << ((-k) as u64)).recip()
        };
        let r = q / two_k;
        let y = (&r - BigRational::one()) / (&r + BigRational::one());
        let (lo, hi) = two_atanh(&y, prec + 8);
        let ln_r = CertifiedReal { lo, hi };
        let ln2 = Self::ln2(prec + 8);
        Ok((&ln2.scale(&int(k)) + &ln_r).round(prec))
    }

    pub fn ln(&self, prec: u32) -> Result<Self> {
        let lo = Self::ln_rational(&self.lo, prec)?;
        let hi = Self::ln_rational(&self.hi, prec)?;
        Ok(CertifiedReal {
            lo: lo.lo,
            hi: hi.hi,
        })
    }

    pub fn exp(&self, prec: u32) -> Self {
        let lo = Self::exp_rational(&self.lo, prec);
        let hi = Self::exp_rational(&self.hi, prec);
        CertifiedReal {
            lo: lo.lo,
            hi: hi.hi,
        }
    }

    /// Machin's formula `pi = 16 atan(1/5) - 4 atan(1/239)`.
    pub fn pi(prec: u32) -> Self {
        let (a_lo, a_hi) = atan_inv(5, prec + 8);
        let (b_lo, b_hi) = atan_inv(239, prec + 8);
        let lo = a_lo * int(16) - b_hi * int(4);
        let hi = a_hi * int(16) - b_lo * int(4);
        CertifiedReal::new(lo, hi).round(prec)
    }

    pub fn max(&self, other: &Self) -> Self {
        CertifiedReal {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }

    pub fn abs(&self) -> Self {
        if !self.lo.is_negative() {
            self.clone()
        } else if !self.hi.is_positive() {
            -self
        } else {
            CertifiedReal {
                lo: BigRational::zero(),
                hi: self.hi.clone().max(-&self.lo),
            }
        }
    }

    pub fn min(&self, other: &Self) -> Self {
        CertifiedReal {
            lo: self.lo.clone().min(other.lo.clone()),
            hi: self.hi.clone().min(other.hi.clone()),
        }
    }

    /// `Some(ordering)` when the comparison with `q` is decided by the enclosure.
    pub fn cmp_rational(&self, q: &BigRational) -> Option<Ordering> {
        if &self.hi < q {
            Some(Ordering::Less)
        } else if &self.lo > q {
            Some(Ordering::Greater)
        } else if self.is_point() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    pub fn definitely_lt(&self, other: &Self) -> bool {
        self.hi < other.lo
    }

    pub fn definitely_le(&self, other: &Self) -> bool {
        self.hi <= other.lo
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NEG_INFINITY)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn mid_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / int(2)).to_f64().unwrap_or(f64::NAN)
    }

    /// Lower end rendered with `digits` decimals, rounded down.
    pub fn lo_decimal(&self, digits: u32) -> String {
        decimal_floor(&self.lo, digits)
    }

    /// Upper end rendered with `digits` decimals, rounded up.
    pub fn hi_decimal(&self, digits: u32) -> String {
        let neg = decimal_floor(&-&self.hi, digits);
        match neg.strip_prefix('-') {
            Some(s) => s.to_string(),
            None if neg.chars().all(|c| c == '0' || c == '.') => neg,
            None => format!("-{neg}"),
        }
    }
}

fn decimal_floor(q: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (q.numer() * &scale).div_floor(q.denom());
    let neg = scaled.is_negative();
    let mag = scaled.abs().to_string();
    let d = digits as usize;
    let padded = if mag.len() <= d {
        format!("{}{}", "0".repeat(d + 1 - mag.len()), mag)
    } else {
        mag
    };
    let (ip, fp) = padded.split_at(padded.len() - d);
    let body = if d == 0 {
        ip.to_string()
    } else {
        format!("{ip}.{fp}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

impl fmt::Display for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo_decimal(12), self.hi_decimal(12))
    }
}

impl Add for &CertifiedReal {
    type Output = CertifiedReal;
    fn add(self, o: &CertifiedReal) -> CertifiedReal {
        CertifiedReal {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }
}

impl Sub for &CertifiedReal {
    type Output = CertifiedReal;
    fn sub(self, o: &CertifiedReal) -> CertifiedReal {
        CertifiedReal {
            lo: &self.lo - &o.hi,
            hi: &self.hi - &o.lo,
        }
    }
}

impl Mul for &CertifiedReal {
    type Output = CertifiedReal;
    fn mul(self, o: &CertifiedReal) -> CertifiedReal {
        let c = [
            &self.lo * &o.lo,
            &self.lo * &o.hi,
            &self.hi * &o.lo,
            &self.hi * &o.hi,
        ];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        CertifiedReal { lo, hi }
    }
}

impl Neg for &CertifiedReal {
    type Output = CertifiedReal;
    fn neg(self) -> CertifiedReal {
        CertifiedReal {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

/// Evaluate `f` at doubling precision until its enclosure decides the
/// comparison with `target`.
pub fn resolve_cmp(
    f: impl Fn(u32) -> Result<CertifiedReal>,
    target: &BigRational,
) -> Result<Ordering> {
    let mut prec = DEFAULT_PREC;
    loop {
        if let Some(ord) = f(prec)?.cmp_rational(target) {
            return Ok(ord);
        }
        if prec >= MAX_PREC {
            return Err(CensusError::Unresolved {
                what: format!("comparison with {target}"),
                bits: prec,
            });
        }
        prec *= 2;
    }
}

/// `160 e^7`, the constant of the real-rooted Maclaurin-type inequality.
pub fn tao_constant(prec: u32) -> CertifiedReal {
    CertifiedReal::exp_rational(&int(7), prec + 8)
        .scale(&int(160))
        .round(prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(x: &CertifiedReal) -> (f64, f64) {
        (x.lo_f64(), x.hi_f64())
    }

    #[test]
    fn sqrt_two_encloses() {
        let s = CertifiedReal::from_int(2).sqrt(64).unwrap();
        let (lo, hi) = f(&s);
        assert!(lo <= 2f64.sqrt() && 2f64.sqrt() <= hi);
        assert!(s.width() < rat(1, 1 << 30));
        // squares bracket 2
        assert!(&s.lo * &s.lo <= int(2) && &s.hi * &s.hi >= int(2));
    }

    #[test]
    fn perfect_roots_are_points() {
        let r = CertifiedReal::from_int(216).root(3, 64).unwrap();
        assert_eq!(r, CertifiedReal::from_int(6));
        let q = CertifiedReal::exact(rat(9, 4)).sqrt(64).unwrap();
        assert_eq!(q, CertifiedReal::exact(rat(3, 2)));
    }

    #[test]
    fn exp_and_ln_enclose_floats() {
        let e7 = CertifiedReal::exp_rational(&int(7), 128);
        let (lo, hi) = f(&e7);
        assert!(lo <= 7f64.exp() * (1.0 + 1e-15) && 7f64.exp() * (1.0 - 1e-15) <= hi);
        assert!(e7.width() < rat(1, 1 << 60));
        let en = CertifiedReal::exp_rational(&int(-3), 96);
        assert!(en.lo_f64() <= (-3f64).exp() * (1.0 + 1e-15));
        let l = CertifiedReal::ln_rational(&int(30030), 128).unwrap();
        assert!((l.mid_f64() - 30030f64.ln()).abs() < 1e-12);
        let l = CertifiedReal::ln_rational(&rat(1, 7), 128).unwrap();
        assert!((l.mid_f64() + 7f64.ln()).abs() < 1e-12);
        let l2 = CertifiedReal::ln2(128);
        assert!(l2.lo_f64() <= std::f64::consts::LN_2 + 1e-16);
    }

    #[test]
    fn pi_and_tao_constant() {
        let p = CertifiedReal::pi(128);
        assert!((p.mid_f64() - std::f64::consts::PI).abs() < 1e-15);
        assert!(p.width() < BigRational::new(BigInt::one(), BigInt::one() << 100));
        let c = tao_constant(128);
        // 160 e^7 = 175461.05...
        assert!(c.lo() > &int(175461) && c.hi() < &int(175462));
    }

    #[test]
    fn decimal_rendering_is_directed() {
        let x = CertifiedReal::new(rat(1, 3), rat(2, 3));
        assert_eq!(x.lo_decimal(3), "0.333");
        assert_eq!(x.hi_decimal(3), "0.667");
        let y = CertifiedReal::new(rat(-2, 3), rat(-1, 3));
        assert_eq!(y.lo_decimal(2), "-0.67");
        assert_eq!(y.hi_decimal(2), "-0.33");
        assert_eq!(CertifiedReal::from_int(5).hi_decimal(0), "5");
    }

    #[test]
    fn rounding_is_outward() {
        let q = rat(1, 3);
        assert!(round_down(&q, 10) <= q && q <= round_up(&q, 10));
        let big = int(BigInt::from(10u32).pow(40)) + rat(1, 7);
        assert!(round_down(&big, 20) <= big && big <= round_up(&big, 20));
        assert_eq!(round_down(&rat(3, 4), 10), rat(3, 4));
    }

    #[test]
    fn resolve_cmp_doubles() {
        // sqrt(2) vs 1.41421356 decided quickly
        let ord = resolve_cmp(|p| CertifiedReal::from_int(2).sqrt(p), &rat(141421356, 100000000));
        assert_eq!(ord.unwrap(), Ordering::Greater);
    }
}
