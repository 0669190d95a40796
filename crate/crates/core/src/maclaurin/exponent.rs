//! Positive reals of the form `prod p^(e_p)` with rational exponents.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::certified::CertifiedReal;
use crate::error::{domain, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExponentVector {
    exps: BTreeMap<u64, BigRational>,
}

/// Trial-division factorization of a positive integer.
fn factor_small(m: &BigInt) -> Vec<(u64, u32)> {
    let mut m = m.clone();
    let mut out = Vec::new();
    let mut p = 2u64;
    while BigInt::from(p) * BigInt::from(p) <= m {
        let bp = BigInt::from(p);
        let mut e = 0;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > BigInt::one() {
        out.push((m.to_u64().expect("prime factor fits in u64"), 1));
    }
    out
}

impl ExponentVector {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_rational(q: &BigRational) -> Result<Self> {
        if !q.is_positive() {
            return domain("exponent vectors represent positive numbers");
        }
        let mut v = Self::one();
        for (p, e) in factor_small(q.numer()) {
            v.add_exp(p, BigRational::from_integer(BigInt::from(e)));
        }
        for (p, e) in factor_small(q.denom()) {
            v.add_exp(p, -BigRational::from_integer(BigInt::from(e)));
        }
        Ok(v)
    }

    pub fn from_int(n: u64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n.max(1))))
            .expect("positive")
    }

    /// `m!` as an exponent vector.
    pub fn factorial(m: u64) -> Self {
        (2..=m).fold(Self::one(), |acc, i| acc.mul(&Self::from_int(i)))
    }

    pub fn binomial(n: u64, k: u64) -> Self {
        Self::factorial(n)
            .div(&Self::factorial(k))
            .div(&Self::factorial(n - k))
    }

    fn add_exp(&mut self, p: u64, e: BigRational) {
        let entry = self.exps.entry(p).or_insert_with(BigRational::zero);
        *entry += e;
        if entry.is_zero() {
            self.exps.remove(&p);
        }
    }

    pub fn exponents(&self) -> &BTreeMap<u64, BigRational> {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, e) in &other.exps {
            out.add_exp(*p, e.clone());
        }
        out
    }

    pub fn recip(&self) -> Self {
        ExponentVector {
            exps: self.exps.iter().map(|(p, e)| (*p, -e)).collect(),
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    pub fn pow(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::one();
        }
        ExponentVector {
            exps: self.exps.iter().map(|(p, e)| (*p, e * r)).collect(),
        }
    }

    /// Least common denominator of the exponents.
    pub fn denominator_lcm(&self) -> BigInt {
        self.exps
            .values()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()))
    }

    /// `self^l` as an exact rational; `l` must clear every denominator.
    pub fn integer_power(&self, l: &BigInt) -> BigRational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (p, e) in &self.exps {
            let k = e * BigRational::from_integer(l.clone());
            assert!(k.is_integer(), "power does not clear exponent denominators");
            let k = k.to_integer();
            let mag = BigInt::from(*p).pow(k.abs().to_u32().expect("exponent fits in u32"));
            if k.is_negative() {
                den *= mag;
            } else {
                num *= mag;
            }
        }
        BigRational::new(num, den)
    }

    /// The value itself when every exponent is an integer.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.denominator_lcm()
            .is_one()
            .then(|| self.integer_power(&BigInt::one()))
    }

    /// Exact comparison by raising the ratio to a power clearing all
    /// exponent denominators.
    pub fn cmp_exact(&self, other: &Self) -> Ordering {
        let r = self.div(other);
        let l = r.denominator_lcm();
        r.integer_power(&l).cmp(&BigRational::one())
    }

    pub fn max(&self, other: &Self) -> Self {
        if self.cmp_exact(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }

    /// Certified enclosure at `prec` bits per factor.
    pub fn to_certified(&self, prec: u32) -> CertifiedReal {
        let mut acc = CertifiedReal::one();
        for (p, e) in &self.exps {
            let base = BigRational::from_integer(BigInt::from(*p));
            let num = e.numer().to_i64().expect("exponent numerator fits in i64");
            let den = e.denom().to_u32().expect("exponent denominator fits in u32");
            let f = CertifiedReal::pow_rational(&base, num, den, prec).expect("positive base");
            acc = &acc * &f;
        }
        acc
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(p, e)| {
                if e.is_one() {
                    format!("{p}")
                } else {
                    format!("{p}^({e})")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic_and_rational_round_trip() {
        let a = ExponentVector::from_rational(&q(12, 35)).unwrap();
        let b = ExponentVector::from_rational(&q(5, 9)).unwrap();
        assert_eq!(a.mul(&b).to_rational().unwrap(), q(4, 21));
        assert_eq!(a.div(&a), ExponentVector::one());
        assert_eq!(ExponentVector::binomial(6, 3).to_rational().unwrap(), q(20, 1));
    }

    #[test]
    fn radicals_compare_exactly() {
        let two = ExponentVector::from_int(2);
        let three = ExponentVector::from_int(3);
        // 2^(1/2) < 3^(1/3)? 2^3 = 8 < 9 = 3^2
        let a = two.pow(&q(1, 2));
        let b = three.pow(&q(1, 3));
        assert_eq!(a.cmp_exact(&b), Ordering::Less);
        assert_eq!(a.max(&b), b);
        assert!(a.to_rational().is_none());
        let c = a.to_certified(128);
        assert!((c.mid_f64() - 2f64.sqrt()).abs() < 1e-15);
    }
}
