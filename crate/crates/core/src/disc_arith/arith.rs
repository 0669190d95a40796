//! Factorization and the arithmetic functions built on it.

use std::sync::OnceLock;

use num_integer::{Integer, Roots};

use crate::error::{domain, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Primes up to `n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

fn trial_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(TRIAL_LIMIT))
}

/// Number of primes `<= x`.
pub fn prime_pi(x: i64) -> u64 {
    if x < 2 {
        return 0;
    }
    let x = x as u64;
    if x <= TRIAL_LIMIT {
        return trial_primes().partition_point(|&p| p <= x) as u64;
    }
    primes_up_to(x).len() as u64
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite `n` (Brent's variant of rho).
fn rho_factor(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut r = 1u64;
        let mut ys = 2u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..(r - k).min(128) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = rho_factor(n);
    split_large(d, out);
    split_large(n / d, out);
}

fn magnitude(m: i128) -> Result<u64> {
    if m == 0 {
        return domain("arithmetic function of 0");
    }
    u64::try_from(m.unsigned_abs()).or_else(|_| domain("magnitude exceeds 64 bits"))
}

/// Prime factorization of `|m|` as ascending `(prime, exponent)` pairs.
pub fn factorize(m: i128) -> Result<Vec<(u64, u32)>> {
    let mut rem = magnitude(m)?;
    let mut out = Vec::new();
    for &p in trial_primes() {
        if p * p > rem {
            break;
        }
        let mut e = 0;
        while rem % p == 0 {
            rem /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    if rem > 1 {
        let mut big = Vec::new();
        split_large(rem, &mut big);
        big.sort_unstable();
        for p in big {
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
    }
    Ok(out)
}

/// Strip primes `p` with `p^3 <= rem`; the cofactor then has at most two
/// prime factors. Returns `None` as soon as `on_prime` returns false.
fn strip_small(mut rem: u64, mut on_prime: impl FnMut(u64, u32) -> bool) -> Option<u64> {
    for &p in trial_primes() {
        if p.saturating_mul(p).saturating_mul(p) > rem {
            break;
        }
        if rem % p == 0 {
            let mut e = 0;
            while rem % p == 0 {
                rem /= p;
                e += 1;
            }
            if !on_prime(p, e) {
                return None;
            }
        }
    }
    Some(rem)
}

/// Number of distinct prime factors of a cofactor with at most two of them.
fn omega_tail(rem: u64) -> u32 {
    if rem == 1 {
        0
    } else if is_prime(rem) {
        1
    } else {
        let r = rem.sqrt();
        if r * r == rem {
            1
        } else {
            2
        }
    }
}

/// Number of distinct prime divisors of `|m|`.
pub fn omega(m: i128) -> Result<u32> {
    let mut w = 0;
    let rem = strip_small(magnitude(m)?, |_, _| {
        w += 1;
        true
    })
    .expect("never stopped");
    Ok(w + omega_tail(rem))
}

/// Product of the distinct primes dividing `|m|`.
pub fn rad(m: i128) -> Result<u64> {
    Ok(factorize(m)?.iter().map(|&(p, _)| p).product())
}

/// `|m|` has no square factor > 1.
pub fn is_squarefree(m: i128) -> Result<bool> {
    let rem = match strip_small(magnitude(m)?, |_, e| e < 2) {
        Some(r) => r,
        None => return Ok(false),
    };
    let r = rem.sqrt();
    Ok(rem == 1 || r * r != rem)
}

/// Both growth bounds on the number of distinct prime divisors:
/// `omega(m) < 2 log m` and, for `m > 2`, `omega(m) < 3 log m / log log m`.
pub fn omega_bound_check(m: u64) -> Result<bool> {
    if m < 2 {
        return domain("m must be at least 2");
    }
    let w = omega(m as i128)? as f64;
    let l = (m as f64).ln();
    // f64 logs are accurate to far better than this margin
    let first = 2.0 * l - w;
    let first = if first.abs() > 1e-9 { first > 0.0 } else { certified_first(m, w)? };
    if m == 2 {
        return Ok(first);
    }
    let second = 3.0 * l - w * l.ln();
    let second = if second.abs() > 1e-9 { second > 0.0 } else { certified_second(m, w)? };
    Ok(first && second)
}

fn certified_first(m: u64, w: f64) -> Result<bool> {
    use crate::certified::{int, resolve_cmp, CertifiedReal};
    let ord = resolve_cmp(
        |prec| Ok(CertifiedReal::ln_rational(&int(m), prec)?.scale(&int(2))),
        &int(w as i64),
    )?;
    Ok(ord == std::cmp::Ordering::Greater)
}

fn certified_second(m: u64, w: f64) -> Result<bool> {
    use crate::certified::{int, resolve_cmp, CertifiedReal};
    let ord = resolve_cmp(
        |prec| {
            let l = CertifiedReal::ln_rational(&int(m), prec)?;
            let ll = l.ln(prec)?;
            Ok(&l.scale(&int(3)) - &ll.scale(&int(w as i64)))
        },
        &int(0),
    )?;
    Ok(ord == std::cmp::Ordering::Greater)
}

/// Euler's totient for `0..=n` by a linear sieve.
pub fn totients(n: usize) -> Vec<u32> {
    let mut phi = vec![0u32; n + 1];
    let mut primes: Vec<usize> = Vec::new();
    if n >= 1 {
        phi[1] = 1;
    }
    for i in 2..=n {
        if phi[i] == 0 {
            phi[i] = (i - 1) as u32;
            primes.push(i);
        }
        for &p in &primes {
            let ip = i * p;
            if ip > n {
                break;
            }
            if i % p == 0 {
                phi[ip] = phi[i] * p as u32;
                break;
            }
            phi[ip] = phi[i] * (p as u32 - 1);
        }
    }
    phi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(factorize(49).unwrap(), vec![(7, 2)]);
        assert_eq!(omega(49).unwrap(), 1);
        assert_eq!(rad(49).unwrap(), 7);
        assert!(!is_squarefree(49).unwrap());
        assert_eq!(omega(-27).unwrap(), 1);
        assert_eq!(rad(-27).unwrap(), 3);
        assert!(!is_squarefree(-27).unwrap());
        assert!(is_squarefree(5).unwrap());
        assert!(is_squarefree(1).unwrap());
        assert!(factorize(0).is_err());
        assert!(is_squarefree(0).is_err());
    }

    #[test]
    fn large_inputs() {
        let p = 1_000_000_007u64;
        let q = 998_244_353u64;
        assert_eq!(factorize((p * q) as i128).unwrap(), vec![(q, 1), (p, 1)]);
        assert_eq!(omega((p * q) as i128).unwrap(), 2);
        assert!(is_squarefree((p * q) as i128).unwrap());
        assert!(!is_squarefree((p as i128) * (p as i128)).unwrap());
        assert_eq!(omega((p as i128) * (p as i128)).unwrap(), 1);
        let m = 2i128 * 3 * 1_000_003 * 1_000_003 * 999_983;
        assert_eq!(factorize(m).unwrap(), vec![(2, 1), (3, 1), (999_983, 1), (1_000_003, 2)]);
        assert!(!is_squarefree(m).unwrap());
    }

    #[test]
    fn agrees_with_trial_division() {
        for m in 1..20_000i128 {
            let f = factorize(m).unwrap();
            assert_eq!(f.iter().map(|&(p, e)| (p as i128).pow(e)).product::<i128>(), m);
            assert_eq!(omega(m).unwrap() as usize, f.len());
            assert_eq!(is_squarefree(m).unwrap(), f.iter().all(|&(_, e)| e == 1));
        }
    }

    #[test]
    fn omega_bounds() {
        assert!(omega_bound_check(2).unwrap());
        assert!(omega_bound_check(30030).unwrap());
        assert!(omega_bound_check(1).is_err());
    }

    #[test]
    fn totient_table() {
        let phi = totients(12);
        assert_eq!(&phi[1..], &[1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
        assert_eq!(prime_pi(13), 6);
        assert_eq!(prime_pi(1), 0);
    }
}
