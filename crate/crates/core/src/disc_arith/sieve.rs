//! Square-free values of quadratics and the sieve bracket around their count.

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::arith::{is_squarefree, omega, prime_pi, primes_up_to, rad};
use super::rho::{rho_quadratic_prime_sq, QuadPoly};
use crate::certified::{int, rat, round_down, round_up, CertifiedReal, DEFAULT_PREC};
use crate::error::{domain, Result};

/// Truncation point used for the infinite product inside the lower bound.
pub const FT_TRUNCATION: u64 = 10_000;

/// Largest `F` with primes up to `F` sieved in memory.
const MAX_SIEVE: u64 = 50_000_000;

/// Certified enclosure of `prod_p (1 - 2/p^2)` over all primes: the product
/// over `p <= P` times a tail factor in `[1 - 4/P, 1]`.
pub fn feller_tornier(truncation: u64) -> Result<CertifiedReal> {
    if truncation < 2 {
        return domain("truncation must be at least 2");
    }
    let prec = DEFAULT_PREC;
    let mut lo = BigRational::one();
    let mut hi = BigRational::one();
    for p in primes_up_to(truncation) {
        let f = BigRational::one() - rat(2, (p * p) as i64);
        lo = round_down(&(lo * &f), prec);
        hi = round_up(&(hi * &f), prec);
    }
    let tail = (BigRational::one() - rat(4, truncation as i64)).max(BigRational::zero());
    Ok(CertifiedReal::new(round_down(&(lo * tail), prec), hi))
}

/// `#{x < n <= y : f(n) square-free}`.
pub fn count_squarefree_values(f: &QuadPoly, x: i64, y: i64) -> Result<u64> {
    if x >= y {
        return domain("need x < y");
    }
    (x + 1..=y)
        .into_par_iter()
        .map(|n| {
            let v = f.eval(n as i128);
            if v == 0 {
                Ok(0)
            } else {
                is_squarefree(v).map(u64::from)
            }
        })
        .collect::<Result<Vec<_>>>()
        .map(|v| v.into_iter().sum())
}

/// Both stated bounds for the square-free count together with the count
/// itself.
#[derive(Clone, Debug)]
pub struct SieveBracket {
    pub lower: CertifiedReal,
    /// The upper bound as stated, with `(1 - 1/p)` for every `p | Delta`.
    pub upper: CertifiedReal,
    /// The upper bound the sieve identity yields, with the exact local
    /// factors `(1 - rho_f(p^2)/p^2)` for all `p <= z`.
    pub upper_sieve: CertifiedReal,
    pub empirical: u64,
    pub params: (i64, i64, i64),
    pub f_max: u64,
}

impl SieveBracket {
    pub fn lower_holds(&self) -> bool {
        self.lower.hi() <= &int(self.empirical)
    }

    pub fn upper_holds(&self) -> bool {
        self.upper.lo() >= &int(self.empirical)
    }

    pub fn upper_sieve_holds(&self) -> bool {
        self.upper_sieve.lo() >= &int(self.empirical)
    }
}

/// `max_{x < n <= y} |f(n)|`, attained at an endpoint or next to the vertex.
fn max_abs_value(f: &QuadPoly, x: i64, y: i64) -> i128 {
    let mut cands = vec![x + 1, y];
    if f.a != 0 {
        let v = -(f.b as i128) / (2 * f.a as i128);
        for t in [v - 1, v, v + 1] {
            if t > x as i128 && t <= y as i128 {
                cands.push(t as i64);
            }
        }
    }
    cands.into_iter().map(|n| f.eval(n as i128).abs()).max().unwrap_or(0)
}

pub fn squarefree_sieve_bounds(f: &QuadPoly, x: i64, y: i64, z: i64) -> Result<SieveBracket> {
    let delta = f.discriminant();
    if delta <= 0 {
        return domain("the discriminant must be positive");
    }
    if x >= y || z >= y || z < 2 {
        return domain("need x < y and 2 <= z < y");
    }
    let m = u64::try_from(max_abs_value(f, x, y)).or_else(|_| domain("values exceed 64 bits"))?;
    let f_max = m.sqrt();
    if f_max > MAX_SIEVE {
        return domain("range too large for the prime sieve");
    }
    let primes = primes_up_to(f_max.max(z.max(0) as u64));
    let g = f.content();
    let len = int(y - x);
    let z_r = int(z);

    let mut delta_factor = BigRational::one();
    let mut content_factor = BigRational::one();
    let mut sieve_factor = BigRational::one();
    let mut tail_ratio = BigRational::zero();
    let mut tail_rho = BigInt::zero();
    let mut tail_delta = BigInt::zero();
    for &p in &primes {
        let divides_delta = delta % p as i128 == 0;
        let divides_content = g % p == 0;
        let p2 = BigInt::from(p * p);
        if p as i64 <= z {
            let rho = rho_quadratic_prime_sq(f, p)?;
            let local = BigRational::one() - BigRational::new(rho.into(), p2.clone());
            sieve_factor *= &local;
            if divides_delta {
                delta_factor *= BigRational::one() - rat(1, p as i64);
            }
            if divides_content {
                content_factor *= local;
            }
        } else if p <= f_max {
            if divides_content {
                let rho = rho_quadratic_prime_sq(f, p)?;
                tail_ratio += BigRational::new(rho.into(), p2);
                tail_rho += rho;
            } else if divides_delta {
                tail_delta += p;
            }
        }
    }
    let pi_z = prime_pi(z);
    let pi_f = prime_pi(f_max as i64);
    let remainder = int(rad(delta)? as i128 * 3i128.pow(pi_z as u32));
    let w = omega(delta)?;

    let main = &len * &delta_factor * &content_factor;
    let ft = feller_tornier(FT_TRUNCATION)?;
    let lower_main = ft.scale(&main);
    let linear = &len * (tail_ratio + rat(w as i64, 1) / &z_r + rat(4, 1) / &z_r);
    let constant = int(tail_rho) + int(tail_delta) + int(2 * (pi_f as i64 - pi_z as i64));
    let lower = &lower_main - &CertifiedReal::exact(&remainder + &linear + &constant);

    let upper = CertifiedReal::exact(&main + &remainder);
    let upper_sieve = CertifiedReal::exact(&len * &sieve_factor + &remainder);
    let empirical = count_squarefree_values(f, x, y)?;
    Ok(SieveBracket { lower, upper, upper_sieve, empirical, params: (x, y, z), f_max })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn feller_tornier_enclosure() {
        let c = feller_tornier(100).unwrap();
        assert!(c.lo_f64() < 0.3226 && c.hi_f64() > 0.3226);
        let c = feller_tornier(FT_TRUNCATION).unwrap();
        assert!(c.lo_f64() > 0.32 && c.hi_f64() < 0.33);
    }

    #[test]
    fn squarefree_counts_add_over_ranges() {
        let f = QuadPoly::new(1, 0, 1);
        let a = count_squarefree_values(&f, 0, 40).unwrap();
        let b = count_squarefree_values(&f, 40, 100).unwrap();
        assert_eq!(a + b, count_squarefree_values(&f, 0, 100).unwrap());
        let sq = QuadPoly::new(1, 0, 0);
        assert_eq!(count_squarefree_values(&sq, -3, 5).unwrap(), 2);
    }

    #[test]
    fn bracket_shape() {
        let f = QuadPoly::new(1, 0, -2);
        let s = squarefree_sieve_bounds(&f, 0, 10_000, 13).unwrap();
        assert!(s.lower_holds());
        assert!(s.upper_sieve_holds());
        assert!(s.empirical <= 10_000);
        assert!(squarefree_sieve_bounds(&QuadPoly::new(1, 0, 2), 0, 100, 7).is_err());
    }
}
