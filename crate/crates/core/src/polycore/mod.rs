//! Dense univariate polynomials over the integers.

mod roots;

pub use roots::{
    all_roots_real, all_roots_real_nonneg, all_roots_real_positive, isolate_real_roots, IsolatedRoots, RootInterval,
    SturmChain,
};

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};

/// Integer polynomial, coefficients stored lowest degree first with no
/// trailing zeros. The zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `X - r`
    pub fn linear_root(r: impl Into<BigInt>) -> Self {
        Self::new(vec![-r.into(), BigInt::one()])
    }

    /// Clear denominators of a rational polynomial with a positive multiplier.
    pub fn from_rational(coeffs: &[BigRational]) -> Self {
        let l = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        Self::new(
            coeffs
                .iter()
                .map(|c| c.numer() * (&l / c.denom()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Sign of `f(p/q)` computed from the homogenised value `q^n f(p/q)`.
    pub fn sign_at(&self, x: &BigRational) -> Sign {
        let p = x.numer();
        let q = x.denom();
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        // Horner on the homogenised form: sum c_i p^i q^(n-i)
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        acc.sign()
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|a| -a).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| acc.mul(self))
    }

    /// Pseudo-remainder: `lc(g)^(deg f - deg g + 1) f = q g + r`.
    pub fn pseudo_rem(&self, g: &Self) -> Self {
        assert!(!g.is_zero(), "pseudo-remainder by zero");
        let dg = g.degree();
        let lc = g.leading();
        let mut r = self.clone();
        if r.is_zero() || r.degree() < dg {
            return r;
        }
        let steps = r.degree() - dg + 1;
        let mut done = 0;
        while !r.is_zero() && r.degree() >= dg {
            let shift = r.degree() - dg;
            let lr = r.leading();
            let mut next: Vec<BigInt> = r.coeffs.iter().map(|c| c * &lc).collect();
            for (i, gc) in g.coeffs.iter().enumerate() {
                next[i + shift] -= &lr * gc;
            }
            r = Self::new(next);
            done += 1;
        }
        // Bring the multiplier to exactly lc^steps.
        let missing = steps - done;
        if missing > 0 {
            r = r.scale(&lc.pow(missing as u32));
        }
        r
    }

    /// Exact quotient over the integers, or `None` when `g` does not divide.
    pub fn div_exact(&self, g: &Self) -> Option<Self> {
        assert!(!g.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < g.degree() {
            return None;
        }
        let dg = g.degree();
        let lc = g.leading();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.degree() - dg + 1];
        for shift in (0..q.len()).rev() {
            let top = &r[shift + dg];
            let (qc, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (i, gc) in g.coeffs.iter().enumerate() {
                r[i + shift] -= &qc * gc;
            }
            q[shift] = qc;
        }
        if r.iter().all(|c| c.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// `f / gcd(f, f')`, primitive with positive leading coefficient.
    pub fn square_free_part(&self) -> Self {
        if self.is_constant() {
            return Self::constant(1);
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd divides its argument")
            .primitive_part()
    }

    /// Square-free decomposition: entry `i` is the primitive product of the
    /// irreducible factors of multiplicity exactly `i + 1` (1 when none).
    pub fn square_free_decomposition(&self) -> Vec<IntPoly> {
        let f = self.primitive_part();
        if f.is_constant() {
            return Vec::new();
        }
        // p[i] = gcd(p[i-1], p[i-1]'); q[i] = p[i-1] / p[i] holds the factors
        // of multiplicity >= i.
        let mut prev = f;
        let mut q = Vec::new();
        while !prev.is_constant() {
            let next = prev.gcd(&prev.derivative());
            q.push(prev.div_exact(&next).expect("gcd divides").primitive_part());
            prev = next;
        }
        q.push(IntPoly::constant(1));
        let mut out: Vec<IntPoly> = q
            .windows(2)
            .map(|w| w[0].div_exact(&w[1]).expect("nested factors").primitive_part())
            .collect();
        while out.last().is_some_and(|p| p.is_constant()) {
            out.pop();
        }
        out
    }

    /// Cauchy bound: every root satisfies `|x| < 1 + max |a_i / a_n|`.
    pub fn cauchy_bound(&self) -> BigInt {
        let lc = self.leading().abs();
        let m = self
            .coeffs
            .iter()
            .take(self.coeffs.len().saturating_sub(1))
            .map(|c| c.abs())
            .max()
            .unwrap_or_default();
        let (q, r) = m.div_rem(&lc);
        q + if r.is_zero() { 1 } else { 2 }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{i}")?,
            }
        }
        Ok(())
    }
}

/// Monic polynomial `X^n - A_1 X^(n-1) + A_2 X^(n-2) - ... + (-1)^n A_n`,
/// stored through its alternating-sign coefficients `A_1 .. A_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonicIntPoly {
    a: Vec<BigInt>,
}

impl MonicIntPoly {
    pub fn new(a: Vec<BigInt>) -> Result<Self> {
        if a.is_empty() {
            return domain("monic polynomial of degree 0");
        }
        Ok(MonicIntPoly { a })
    }

    pub fn from_i64(a: &[i64]) -> Result<Self> {
        Self::new(a.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn degree(&self) -> usize {
        self.a.len()
    }

    /// `A_1 .. A_n`
    pub fn coeffs(&self) -> &[BigInt] {
        &self.a
    }

    pub fn trace(&self) -> &BigInt {
        &self.a[0]
    }

    pub fn to_int_poly(&self) -> IntPoly {
        let n = self.a.len();
        let mut c = vec![BigInt::zero(); n + 1];
        c[n] = BigInt::one();
        for (k, ak) in self.a.iter().enumerate() {
            let k = k + 1;
            c[n - k] = if k % 2 == 0 { ak.clone() } else { -ak };
        }
        IntPoly::new(c)
    }

    pub fn from_int_poly(f: &IntPoly) -> Result<Self> {
        if f.is_constant() || !f.leading().is_one() {
            return domain("polynomial is not monic of positive degree");
        }
        let n = f.degree();
        let a = (1..=n)
            .map(|k| {
                let c = f.coeff(n - k);
                if k % 2 == 0 {
                    c
                } else {
                    -c
                }
            })
            .collect();
        Ok(MonicIntPoly { a })
    }
}

impl fmt::Display for MonicIntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_int_poly().fmt(f)
    }
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Resultant via the Sylvester matrix.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let n = f.degree();
    let m = g.degree();
    if n == 0 && m == 0 {
        return BigInt::one();
    }
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in f.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in g.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    bareiss_det(rows)
}

/// Standard discriminant `(-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    if f.is_constant() {
        return domain("discriminant of a constant polynomial");
    }
    let n = f.degree();
    if n == 1 {
        return Ok(BigInt::one());
    }
    let res = resultant(f, &f.derivative());
    let q = res / f.leading();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}

/// Discriminant of `X^3 - A X^2 + B X - C`.
pub fn cubic_discriminant(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    let a2 = a * a;
    let a3 = &a2 * a;
    let b2 = b * b;
    let b3 = &b2 * b;
    BigInt::from(-27) * c * c + (BigInt::from(-4) * &a3 + BigInt::from(18) * a * b) * c + &a2 * &b2
        - BigInt::from(4) * &b3
}

/// Largest `r` with `r^k <= m`.
pub fn ikth_root_floor(m: &BigInt, k: u32) -> Result<BigInt> {
    if m.is_negative() {
        return domain("integer root of a negative number");
    }
    if k == 0 {
        return domain("zeroth root");
    }
    Ok(if k == 1 { m.clone() } else { m.nth_root(k) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn discriminant_examples() {
        // (X-1)^3
        assert_eq!(discriminant(&p(&[-1, 3, -3, 1])).unwrap(), b(0));
        assert_eq!(discriminant(&p(&[-1, 5, -6, 1])).unwrap(), b(49));
        assert_eq!(discriminant(&p(&[1, 1, 1])).unwrap(), b(-3));
        assert!(discriminant(&p(&[5])).is_err());
        // non-monic quadratic: B^2 - 4AC
        assert_eq!(discriminant(&p(&[1, 1, 3])).unwrap(), b(1 - 12));
        // quartic with roots 1,2,3,4: prod (ri-rj)^2 = (1*2*3*1*2*1)^2 = 144
        let q = p(&[24, -50, 35, -10, 1]);
        assert_eq!(discriminant(&q).unwrap(), b(144));
    }

    #[test]
    fn cubic_discriminant_examples() {
        assert_eq!(cubic_discriminant(&b(3), &b(3), &b(1)), b(0));
        assert_eq!(cubic_discriminant(&b(3), &b(1), &b(-2)), b(5));
        assert_eq!(cubic_discriminant(&b(0), &b(0), &b(1)), b(-27));
        assert_eq!(cubic_discriminant(&b(6), &b(5), &b(1)), b(49));
    }

    #[test]
    fn ikth_root_examples() {
        assert_eq!(ikth_root_floor(&b(216), 3).unwrap(), b(6));
        assert_eq!(ikth_root_floor(&b(215), 3).unwrap(), b(5));
        assert_eq!(ikth_root_floor(&b(4 * 216), 2).unwrap(), b(29));
        assert_eq!(ikth_root_floor(&b(0), 5).unwrap(), b(0));
        assert!(ikth_root_floor(&b(-1), 2).is_err());
    }

    #[test]
    fn gcd_and_square_free() {
        // (X-1)^2 (X+2)
        let f = p(&[-1, 1]).pow(2).mul(&p(&[2, 1]));
        assert_eq!(f.square_free_part(), p(&[-1, 1]).mul(&p(&[2, 1])));
        assert_eq!(f.gcd(&f.derivative()), p(&[-1, 1]));
        let g = p(&[0, 0, 0, 1]);
        assert_eq!(g.square_free_part(), p(&[0, 1]));
    }

    #[test]
    fn yun_multiplicities() {
        // (X-1)^3 (X+2)^2 (3X-1)
        let f = p(&[-1, 1]).pow(3).mul(&p(&[2, 1]).pow(2)).mul(&p(&[-1, 3]));
        let d = f.square_free_decomposition();
        assert_eq!(d.len(), 3);
        assert_eq!(d[0], p(&[-1, 3]));
        assert_eq!(d[1], p(&[2, 1]));
        assert_eq!(d[2], p(&[-1, 1]));
    }

    #[test]
    fn sign_at_matches_rational_eval() {
        let f = p(&[-2, 0, 1]);
        for (n, d) in [(1, 1), (3, 2), (-7, 5), (17, 12), (0, 1)] {
            let x = BigRational::new(b(n), b(d));
            assert_eq!(f.sign_at(&x), f.eval_rational(&x).numer().sign());
        }
    }

    #[test]
    fn monic_round_trip() {
        let m = MonicIntPoly::from_i64(&[6, 11, 6]).unwrap();
        let f = m.to_int_poly();
        assert_eq!(f, p(&[-6, 11, -6, 1]));
        assert_eq!(MonicIntPoly::from_int_poly(&f).unwrap(), m);
        assert_eq!(m.to_string(), "X^3 - 6X^2 + 11X - 6");
    }

    #[test]
    fn pseudo_rem_identity() {
        let f = p(&[1, 2, 3, 4, 5]);
        let g = p(&[1, 0, 3]);
        let r = f.pseudo_rem(&g);
        assert!(r.degree() < 2);
        // lc^3 f - r is divisible by g
        let lhs = f.scale(&b(27)).sub(&r);
        assert!(lhs.div_exact(&g).is_some());
    }
}
