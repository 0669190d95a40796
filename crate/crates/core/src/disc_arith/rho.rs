//! Root counts of quadratics modulo prime squares.

use std::fmt;

use num_integer::Integer;

use super::arith::{is_prime, omega, pow_mod, rad};
use crate::error::{domain, Result};

/// `f = A X^2 + B X + C` with its discriminant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadPoly {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    delta: i128,
}

impl QuadPoly {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        let delta = b as i128 * b as i128 - 4 * a as i128 * c as i128;
        QuadPoly { a, b, c, delta }
    }

    pub fn discriminant(&self) -> i128 {
        self.delta
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0
    }

    pub fn eval(&self, x: i128) -> i128 {
        (self.a as i128 * x + self.b as i128) * x + self.c as i128
    }

    /// `gcd(A, B, C)`.
    pub fn content(&self) -> u64 {
        (self.a.unsigned_abs()).gcd(&self.b.unsigned_abs()).gcd(&self.c.unsigned_abs())
    }

    fn divide(&self, p: i64) -> QuadPoly {
        QuadPoly::new(self.a / p, self.b / p, self.c / p)
    }
}

impl fmt::Display for QuadPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}X^2 + {}X + {}", self.a, self.b, self.c)
    }
}

/// Number of `x` in `[0, m)` with `f(x) = 0 mod m`, by direct evaluation.
pub fn rho_bruteforce(f: &QuadPoly, m: u64) -> u64 {
    let m = m as i128;
    let (a, b, c) = (f.a as i128 % m, f.b as i128 % m, f.c as i128 % m);
    (0..m)
        .filter(|&x| ((a * x % m * x + b * x + c) % m) == 0)
        .count() as u64
}

fn rem(x: i128, p: u64) -> u64 {
    x.rem_euclid(p as i128) as u64
}

/// Legendre symbol `(d / p)` for an odd prime `p`.
pub fn legendre(d: i128, p: u64) -> i32 {
    let r = rem(d, p);
    if r == 0 {
        0
    } else if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// `rho_f(p)` for a prime `p`.
pub fn rho_prime(f: &QuadPoly, p: u64) -> u64 {
    if p == 2 {
        return rho_bruteforce(f, 2);
    }
    if rem(f.a as i128, p) != 0 {
        return match legendre(f.delta, p) {
            0 => 1,
            1 => 2,
            _ => 0,
        };
    }
    if rem(f.b as i128, p) != 0 {
        1
    } else if rem(f.c as i128, p) != 0 {
        0
    } else {
        p
    }
}

/// `rho_f(p^2)` by the case analysis on the Legendre symbol and the
/// `p`-adic valuation of the discriminant; `p = 2` is counted directly.
pub fn rho_quadratic_prime_sq(f: &QuadPoly, p: u64) -> Result<u64> {
    if f.is_zero() {
        return domain("zero polynomial");
    }
    if !is_prime(p) {
        return domain(format!("{p} is not prime"));
    }
    if p == 2 {
        return Ok(rho_bruteforce(f, 4));
    }
    let p2 = p * p;
    let d_mod_p = rem(f.delta, p);
    let d_mod_p2 = rem(f.delta, p2);
    if rem(f.a as i128, p) != 0 {
        return Ok(if d_mod_p2 == 0 {
            p
        } else if d_mod_p == 0 {
            0
        } else if legendre(f.delta, p) == 1 {
            2
        } else {
            0
        });
    }
    if d_mod_p != 0 {
        return Ok(1);
    }
    if d_mod_p2 != 0 {
        return Ok(0);
    }
    if rem(f.c as i128, p) != 0 {
        // p | B and p does not divide C: no root even mod p
        return Ok(0);
    }
    Ok(p * rho_prime(&f.divide(p as i64), p))
}

/// `rho_f(d^2)` for square-free `d`, multiplying the prime-square counts.
pub fn rho_squarefree_sq(f: &QuadPoly, d: u64) -> Result<u64> {
    let mut acc = 1u64;
    for (p, e) in super::arith::factorize(d as i128)? {
        if e > 1 {
            return domain("d must be square-free");
        }
        acc *= rho_quadratic_prime_sq(f, p)?;
    }
    Ok(acc)
}

/// `rho_f(d^2) <= 2^omega(d) rad(Delta_f)` for odd square-free `d` coprime
/// to `A` and `Delta_f != 0`.
pub fn rho_bound_holds(f: &QuadPoly, d: u64) -> Result<bool> {
    if f.delta == 0 {
        return domain("zero discriminant");
    }
    if d % 2 == 0 || d.gcd(&f.a.unsigned_abs()) != 1 {
        return domain("d must be odd and coprime to A");
    }
    let r = rho_bruteforce(f, d * d) as u128;
    let bound = (1u128 << omega(d as i128)?) * rad(f.delta)? as u128;
    Ok(r <= bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_examples() {
        let f = QuadPoly::new(1, 1, 1);
        assert_eq!(rho_quadratic_prime_sq(&f, 5).unwrap(), 0);
        assert_eq!(rho_quadratic_prime_sq(&f, 3).unwrap(), 0);
        assert_eq!(rho_quadratic_prime_sq(&QuadPoly::new(1, 0, -1), 3).unwrap(), 2);
        assert_eq!(rho_quadratic_prime_sq(&QuadPoly::new(3, 1, 1), 3).unwrap(), 1);
        assert!(rho_quadratic_prime_sq(&QuadPoly::new(0, 0, 0), 3).is_err());
        assert!(rho_quadratic_prime_sq(&f, 9).is_err());
    }

    #[test]
    fn brute_examples() {
        assert_eq!(rho_bruteforce(&QuadPoly::new(1, 0, -1), 9), 2);
        assert_eq!(rho_bruteforce(&QuadPoly::new(1, 0, 0), 9), 3);
        assert_eq!(rho_bruteforce(&QuadPoly::new(2, 2, 0), 4), 4);
    }

    #[test]
    fn engine_matches_brute_force_on_a_grid() {
        for a in -6..=6 {
            for b in -6..=6 {
                for c in -6..=6 {
                    let f = QuadPoly::new(a * 3, b, c * 3);
                    if f.is_zero() {
                        continue;
                    }
                    for p in [2u64, 3, 5, 7] {
                        assert_eq!(
                            rho_quadratic_prime_sq(&f, p).unwrap(),
                            rho_bruteforce(&f, p * p),
                            "{f} at {p}"
                        );
                    }
                }
            }
        }
    }
}
