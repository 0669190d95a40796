//! Enumeration of monic integer polynomials with real positive (or
//! nonnegative) roots and fixed trace, level by level along the normalized
//! derivative chain.
//!
//! Level `k` is `P_k(X) = sum_j (-1)^j C(k,j)/C(n,j) A_j X^(k-j)`, which equals
//! `(n-k)!/n! f^(n-k)` for every extension `f` of the prefix. Writing
//! `P_k = Q_k + (-1)^k A_k / C(n,k)` with `Q_k(0) = 0`, `Q_k' = k P_(k-1)`.
//! If `P_k` is real-rooted and the roots of `P_(k-1)` are
//! `b_1 >= b_2 >= ...` (with multiplicity), then `c = -(P_k(0))` satisfies
//! `c >= Q_k(b_i)` for odd `i` and `c <= Q_k(b_i)` for even `i`.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::cubic_census::{count_p3_scaled, RationalScaling, Variant};
use crate::error::{domain, Result};
use crate::polycore::{all_roots_real_positive, isolate_real_roots, IntPoly, MonicIntPoly, SturmChain};

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Level `k` of the derivative chain for a degree-`n` polynomial with fixed
/// prefix `A_1 .. A_(k-1)`.
#[derive(Clone, Debug)]
pub struct DerivativeChainLevel {
    pub n: usize,
    pub k: usize,
    pub prefix: Vec<BigInt>,
}

impl DerivativeChainLevel {
    pub fn new(n: usize, prefix: Vec<BigInt>) -> Result<Self> {
        let k = prefix.len() + 1;
        if k < 2 || k > n {
            return domain(format!("level {k} outside 2..={n}"));
        }
        Ok(DerivativeChainLevel { n, k, prefix })
    }

    /// Coefficients of `P_j` (lowest degree first) for `j <= k - 1`, or of
    /// `Q_k` when `j == k` (the constant term is left at zero).
    fn chain_poly(&self, j: usize) -> Vec<BigRational> {
        let n = self.n as u64;
        let mut c = vec![BigRational::zero(); j + 1];
        for i in 0..=j.min(self.prefix.len()) {
            let a = if i == 0 { BigInt::one() } else { self.prefix[i - 1].clone() };
            let v = BigRational::new(binomial(j as u64, i as u64) * a, binomial(n, i as u64));
            c[j - i] = if i % 2 == 1 { -v } else { v };
        }
        c
    }

    /// `P_(k-1)`, fully determined by the prefix.
    pub fn previous(&self) -> Vec<BigRational> {
        self.chain_poly(self.k - 1)
    }

    /// `Q_k = P_k - P_k(0)`.
    pub fn q(&self) -> Vec<BigRational> {
        self.chain_poly(self.k)
    }

    /// `P_k` with `A_k` substituted.
    pub fn with_constant(&self, ak: &BigInt) -> Vec<BigRational> {
        let mut c = self.q();
        let v = BigRational::new(ak.clone(), binomial(self.n as u64, self.k as u64));
        c[0] = if self.k % 2 == 1 { -v } else { v };
        c
    }
}

/// Outward window for the constant of one level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantWindow {
    /// Rational enclosure of the admissible `c` (None = unbounded side).
    pub c_lo: Option<BigRational>,
    pub c_hi: Option<BigRational>,
    /// Integer range for `A_k = (-1)^(k+1) C(n,k) c`, before the sign filter.
    pub a_lo: Option<BigInt>,
    pub a_hi: Option<BigInt>,
}

impl ConstantWindow {
    pub fn is_empty(&self) -> bool {
        matches!((&self.a_lo, &self.a_hi), (Some(l), Some(h)) if l > h)
    }
}

type Interval = (BigRational, BigRational);

fn eval_interval(coeffs: &[BigRational], x: &Interval) -> Interval {
    let mut lo = BigRational::zero();
    let mut hi = BigRational::zero();
    for c in coeffs.iter().rev() {
        let prods = [&lo * &x.0, &lo * &x.1, &hi * &x.0, &hi * &x.1];
        let mn = prods.iter().min().unwrap().clone();
        let mx = prods.iter().max().unwrap().clone();
        lo = mn + c;
        hi = mx + c;
    }
    (lo, hi)
}

fn eval_exact(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    coeffs
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn floor_q(q: &BigRational) -> BigInt {
    q.numer().div_floor(q.denom())
}

fn ceil_q(q: &BigRational) -> BigInt {
    -((-q.numer()).div_floor(q.denom()))
}

/// Which integer rounding of `w = W(beta)` the window needs.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Need {
    Floor,
    Ceil,
}

/// Refinement cap before falling back to an outward integer bound.
const MAX_REFINE_STEPS: usize = 400;

/// Integer rounding of `W(beta)` for the single root `beta` of `sqf` in the
/// open interval `(lo, hi)` (or the point `lo == hi`), plus a rational
/// enclosure of `W(beta)`.
fn round_at_root(
    w: &[BigRational],
    sqf: &IntPoly,
    lo: &BigRational,
    hi: &BigRational,
    need: Need,
) -> (BigInt, Interval) {
    if lo == hi {
        let v = eval_exact(w, lo);
        let r = if need == Need::Floor { floor_q(&v) } else { ceil_q(&v) };
        return (r, (v.clone(), v));
    }
    let (mut l, mut h) = (lo.clone(), hi.clone());
    let two = BigRational::from_integer(BigInt::from(2));
    let sign_l = sqf.sign_at(&l);
    let mut tried_cert: Option<BigInt> = None;
    for _ in 0..MAX_REFINE_STEPS {
        let enc = if l == h {
            let v = eval_exact(w, &l);
            (v.clone(), v)
        } else {
            eval_interval(w, &(l.clone(), h.clone()))
        };
        let (fl, fh) = (floor_q(&enc.0), floor_q(&enc.1));
        let (cl, ch) = (ceil_q(&enc.0), ceil_q(&enc.1));
        match need {
            Need::Floor if fl == fh => return (fl, enc),
            Need::Ceil if cl == ch => return (cl, enc),
            _ => {}
        }
        // A single integer m inside a narrow enclosure: W(beta) = m exactly
        // iff beta is a root of gcd(W - m, sqf).
        if &enc.1 - &enc.0 < BigRational::one() {
            let m = ceil_q(&enc.0);
            if BigRational::from_integer(m.clone()) <= enc.1 && tried_cert.as_ref() != Some(&m) {
                tried_cert = Some(m.clone());
                let wm: Vec<BigRational> = w
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if i == 0 { c - BigRational::from_integer(m.clone()) } else { c.clone() })
                    .collect();
                let g = IntPoly::from_rational(&wm).gcd(sqf);
                if !g.is_constant() && l != h && SturmChain::new(&g).count_in(&l, &h) > 0 {
                    let v = BigRational::from_integer(m.clone());
                    return (m, (v.clone(), v));
                }
            }
        }
        if l == h {
            break;
        }
        let mid = (&l + &h) / &two;
        let sm = sqf.sign_at(&mid);
        if sm == Sign::NoSign {
            l = mid.clone();
            h = mid;
        } else if sm == sign_l {
            l = mid;
        } else {
            h = mid;
        }
    }
    // Outward fallback keeps the window a superset.
    let enc = eval_interval(w, &(l, h));
    let r = if need == Need::Floor { floor_q(&enc.1) } else { ceil_q(&enc.0) };
    (r, enc)
}

/// Roots of `P_(k-1)` in descending order with multiplicity, as isolating
/// intervals of its square-free part. `None` when `P_(k-1)` is not real-rooted
/// on the required half-line.
fn critical_points(prev: &[BigRational], strict: bool) -> Option<(IntPoly, Vec<(BigRational, BigRational, usize)>)> {
    let p = IntPoly::from_rational(prev);
    let monic_ok = {
        let sqf = p.square_free_part();
        let chain = SturmChain::new(&sqf);
        let zero = BigRational::zero();
        let at_zero = sqf.sign_at(&zero) == Sign::NoSign;
        if strict && at_zero {
            false
        } else {
            chain.count_above(&zero) + usize::from(at_zero) == sqf.degree()
        }
    };
    if !monic_ok {
        return None;
    }
    let iso = isolate_real_roots(&p);
    let sqf = iso.square_free_part().clone();
    let roots = iso
        .intervals()
        .iter()
        .rev()
        .map(|r| (r.lo.clone(), r.hi.clone(), r.multiplicity))
        .collect();
    Some((sqf, roots))
}

/// Admissible window for the constant of `level`. `None` when the previous
/// level is not real-rooted on the required half-line (the branch is dead).
pub fn admissible_constant_interval(level: &DerivativeChainLevel, strict: bool) -> Option<ConstantWindow> {
    let (sqf, roots) = critical_points(&level.previous(), strict)?;
    let k = level.k;
    let cnk = binomial(level.n as u64, k as u64);
    // A_k = s C(n,k) c
    let s: i64 = if k % 2 == 1 { 1 } else { -1 };
    let w: Vec<BigRational> = level
        .q()
        .iter()
        .map(|c| c * BigRational::from_integer(&cnk * s))
        .collect();
    let q = level.q();
    let mut win = ConstantWindow { c_lo: None, c_hi: None, a_lo: None, a_hi: None };
    let mut index = 0usize;
    for (lo, hi, mult) in roots {
        let first = index + 1;
        index += mult;
        let has_odd = (first..=index).any(|i| i % 2 == 1);
        let has_even = (first..=index).any(|i| i % 2 == 0);
        let qenc = if lo == hi {
            let v = eval_exact(&q, &lo);
            (v.clone(), v)
        } else {
            eval_interval(&q, &(lo.clone(), hi.clone()))
        };
        // odd: c >= Q(b) ; even: c <= Q(b)
        if has_odd {
            let v = qenc.0.clone();
            win.c_lo = Some(match win.c_lo.take() {
                Some(x) if x >= v => x,
                _ => v,
            });
            // c lower bound maps to an A_k lower bound when s = +1.
            let need = if s == 1 { Need::Ceil } else { Need::Floor };
            let (r, _) = round_at_root(&w, &sqf, &lo, &hi, need);
            tighten(&mut win, s == 1, r);
        }
        if has_even {
            let v = qenc.1.clone();
            win.c_hi = Some(match win.c_hi.take() {
                Some(x) if x <= v => x,
                _ => v,
            });
            let need = if s == 1 { Need::Floor } else { Need::Ceil };
            let (r, _) = round_at_root(&w, &sqf, &lo, &hi, need);
            tighten(&mut win, s != 1, r);
        }
    }
    Some(win)
}

fn tighten(win: &mut ConstantWindow, lower: bool, r: BigInt) {
    if lower {
        win.a_lo = Some(match win.a_lo.take() {
            Some(x) if x >= r => x,
            _ => r,
        });
    } else {
        win.a_hi = Some(match win.a_hi.take() {
            Some(x) if x <= r => x,
            _ => r,
        });
    }
}

/// Maclaurin cap `A_k <= C(n,k) (A/n)^k` for nonnegative roots.
fn maclaurin_cap(n: usize, k: usize, a: &BigInt) -> BigInt {
    let num = binomial(n as u64, k as u64) * a.pow(k as u32);
    let den = BigInt::from(n).pow(k as u32);
    num.div_floor(&den)
}

struct Search<'a> {
    n: usize,
    strict: bool,
    emit: &'a mut dyn FnMut(&[BigInt]),
}

impl Search<'_> {
    fn descend(&mut self, prefix: &mut Vec<BigInt>) {
        let k = prefix.len() + 1;
        if k > self.n {
            let m = MonicIntPoly::new(prefix.clone()).expect("nonempty");
            if all_roots_real_positive(&m, self.strict) {
                (self.emit)(prefix);
            }
            return;
        }
        let Some((lo, hi)) = level_range(self.n, prefix, self.strict) else {
            return;
        };
        let mut ak = lo;
        while ak <= hi {
            prefix.push(ak.clone());
            self.descend(prefix);
            prefix.pop();
            ak += 1u32;
        }
    }
}

/// Integer range for `A_k` after the sign condition and the Maclaurin cap.
fn level_range(n: usize, prefix: &[BigInt], strict: bool) -> Option<(BigInt, BigInt)> {
    let level = DerivativeChainLevel::new(n, prefix.to_vec()).ok()?;
    let win = admissible_constant_interval(&level, strict)?;
    let floor = BigInt::from(if strict { 1 } else { 0 });
    let cap = maclaurin_cap(n, level.k, &prefix[0]);
    let lo = win.a_lo.map_or(floor.clone(), |x| x.max(floor));
    let hi = win.a_hi.map_or(cap.clone(), |x| x.min(cap));
    (lo <= hi).then_some((lo, hi))
}

fn trivial_case(n: usize, a: i64, strict: bool) -> Option<Vec<MonicIntPoly>> {
    let min_trace = if strict { n as i64 } else { 0 };
    if a < min_trace {
        return Some(Vec::new());
    }
    if n == 1 {
        return Some(vec![MonicIntPoly::from_i64(&[a]).expect("degree 1")]);
    }
    None
}

/// Run the search, partitioned over `A_2`, and return per-partition results
/// in ascending `A_2` order.
fn run_partitioned<T: Send>(
    n: usize,
    a: i64,
    strict: bool,
    make: impl Fn() -> T + Sync,
    visit: impl Fn(&mut T, &[BigInt]) + Sync,
) -> Vec<T> {
    let root = vec![BigInt::from(a)];
    let Some((lo, hi)) = level_range(n, &root, strict) else {
        return Vec::new();
    };
    let lo = lo.to_i64().expect("A_2 fits in i64");
    let hi = hi.to_i64().expect("A_2 fits in i64");
    (lo..=hi)
        .into_par_iter()
        .map(|a2| {
            let mut acc = make();
            let mut emit = |p: &[BigInt]| visit(&mut acc, p);
            let mut search = Search { n, strict, emit: &mut emit };
            let mut prefix = vec![BigInt::from(a), BigInt::from(a2)];
            search.descend(&mut prefix);
            acc
        })
        .collect()
}

/// Monic degree-`n` integer polynomials with trace `a` and all roots real and
/// positive (`strict`) or nonnegative, sorted by `(A_2, .., A_n)`.
pub fn enumerate_positive_real_monic(n: usize, a: i64, strict: bool) -> Vec<MonicIntPoly> {
    if n == 0 {
        return Vec::new();
    }
    if let Some(v) = trivial_case(n, a, strict) {
        return v;
    }
    run_partitioned(n, a, strict, Vec::new, |acc: &mut Vec<MonicIntPoly>, p| {
        acc.push(MonicIntPoly::new(p.to_vec()).expect("nonempty"))
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Length of [`enumerate_positive_real_monic`] without materialising it.
pub fn count_positive_real_monic(n: usize, a: i64, strict: bool) -> u64 {
    if n == 0 {
        return 0;
    }
    if let Some(v) = trivial_case(n, a, strict) {
        return v.len() as u64;
    }
    run_partitioned(n, a, strict, || 0u64, |acc: &mut u64, _| *acc += 1)
        .into_iter()
        .sum()
}

/// Triples `(A, A_2, A_3)` extendable to a degree-`n` polynomial with all
/// roots real and nonnegative: the scaled cubic count with
/// `(3/n, 6/(n(n-1)), 6/(n(n-1)(n-2)))`.
pub fn count_prefix3(n: usize, a: i64) -> Result<u128> {
    if n < 4 {
        return domain("count_prefix3 needs n >= 4");
    }
    Ok(count_p3_scaled(a, &prefix3_scaling(n), Variant::Nonneg))
}

pub fn prefix3_scaling(n: usize) -> RationalScaling {
    let n = n as i64;
    let r = |p: i64, q: i64| BigRational::new(BigInt::from(p), BigInt::from(q));
    RationalScaling::new(r(3, n), r(6, n * (n - 1)), r(6, n * (n - 1) * (n - 2)))
        .expect("positive for n >= 3")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn window(n: usize, prefix: &[i64]) -> ConstantWindow {
        let level = DerivativeChainLevel::new(n, prefix.iter().map(|&x| b(x)).collect()).unwrap();
        admissible_constant_interval(&level, false).unwrap()
    }

    #[test]
    fn cubic_windows() {
        let w = window(3, &[6, 9]);
        assert_eq!((w.a_lo.unwrap(), w.a_hi.unwrap()), (b(0), b(4)));
        let w = window(3, &[3, 3]);
        assert_eq!((w.a_lo.unwrap(), w.a_hi.unwrap()), (b(1), b(1)));
        let w = window(3, &[6, 1]);
        assert_eq!((w.a_lo.unwrap(), w.a_hi.unwrap()), (b(-28), b(0)));
        let w = window(3, &[6, 10]);
        assert_eq!((w.a_lo.unwrap(), w.a_hi.unwrap()), (b(3), b(5)));
    }

    #[test]
    fn chain_level_is_normalized_derivative() {
        // f = (X-1)(X-2)(X-3)(X-4): A = (10, 35, 50, 24); P_3 = f'/4
        let level = DerivativeChainLevel::new(4, vec![b(10), b(35)]).unwrap();
        let p3 = level.with_constant(&b(50));
        let f = IntPoly::from_i64(&[24, -50, 35, -10, 1]);
        let d = f.derivative();
        for (i, c) in p3.iter().enumerate() {
            assert_eq!(c * BigRational::from_integer(b(4)), BigRational::from_integer(d.coeff(i)));
        }
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(count_positive_real_monic(3, 3, true), 1);
        assert_eq!(count_positive_real_monic(3, 6, true), 16);
        assert_eq!(count_positive_real_monic(2, 3, true), 2);
        for n in 1..=6 {
            let v = enumerate_positive_real_monic(n, n as i64, true);
            assert_eq!(v.len(), 1, "n = {n}");
            let ones: Vec<BigInt> = (1..=n as u64).map(|k| binomial(n as u64, k)).collect();
            assert_eq!(v[0].coeffs(), ones.as_slice());
        }
        assert!(enumerate_positive_real_monic(3, 0, true).is_empty());
        assert_eq!(enumerate_positive_real_monic(1, 5, true).len(), 1);
    }

    #[test]
    fn enumeration_is_sorted() {
        let v = enumerate_positive_real_monic(4, 9, true);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn prefix3_small() {
        assert!(count_prefix3(3, 4).is_err());
        assert!(count_prefix3(5, 1).unwrap() >= 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), b(20));
        assert_eq!(binomial(3, 5), b(0));
    }
}
