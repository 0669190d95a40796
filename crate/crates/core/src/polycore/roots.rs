//! Sturm sequences and exact real-root isolation.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{IntPoly, MonicIntPoly};

/// Sturm chain of a square-free polynomial, each member primitive up to a
/// positive factor.
#[derive(Clone, Debug)]
pub struct SturmChain {
    polys: Vec<IntPoly>,
}

fn variations(signs: impl Iterator<Item = Sign>) -> usize {
    let mut last = Sign::NoSign;
    let mut count = 0;
    for s in signs {
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut polys = vec![p.clone()];
        if p.is_constant() {
            return SturmChain { polys };
        }
        polys.push(p.derivative());
        loop {
            let n = polys.len();
            let (a, b) = (&polys[n - 2], &polys[n - 1]);
            let r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            // prem multiplies by lc(b)^e; undo a negative multiplier.
            let e = a.degree() + 1 - b.degree();
            let flip = b.leading().is_negative() && e % 2 == 1;
            let mut next = if flip { r } else { r.neg() };
            let c = next.content();
            next = IntPoly::new(next.coeffs().iter().map(|x| x / &c).collect());
            polys.push(next);
        }
        SturmChain { polys }
    }

    pub fn polys(&self) -> &[IntPoly] {
        &self.polys
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        variations(self.polys.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        variations(self.polys.iter().map(|p| p.leading().sign()))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        variations(self.polys.iter().map(|p| {
            let s = p.leading().sign();
            if p.degree() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct roots in `(a, b]`.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots.
    pub fn count_real(&self) -> usize {
        self.variations_at_neg_inf()
            .saturating_sub(self.variations_at_pos_inf())
    }

    /// Number of distinct roots in `(a, +inf)`.
    pub fn count_above(&self, a: &BigRational) -> usize {
        self.variations_at(a)
            .saturating_sub(self.variations_at_pos_inf())
    }
}

/// One isolated root: either a point `lo == hi` (an exact rational root) or
/// an open interval `(lo, hi)` whose endpoints are not roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

/// Disjoint isolating intervals for the distinct real roots of a polynomial,
/// in ascending order.
#[derive(Clone, Debug)]
pub struct IsolatedRoots {
    sqf: IntPoly,
    intervals: Vec<RootInterval>,
}

impl IsolatedRoots {
    pub fn intervals(&self) -> &[RootInterval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.intervals.iter().map(|r| r.multiplicity).sum()
    }

    /// Square-free part the intervals were isolated against.
    pub fn square_free_part(&self) -> &IntPoly {
        &self.sqf
    }

    /// Bisect root `i` until its width is at most `width`.
    pub fn refine_root(&mut self, i: usize, width: &BigRational) {
        let sqf = &self.sqf;
        let r = &mut self.intervals[i];
        let two = BigRational::from_integer(BigInt::from(2));
        while !r.is_exact() && r.width() > *width {
            let mid = (&r.lo + &r.hi) / &two;
            let sm = sqf.sign_at(&mid);
            if sm == Sign::NoSign {
                r.lo = mid.clone();
                r.hi = mid;
                break;
            }
            if sqf.sign_at(&r.lo) != sm {
                r.hi = mid;
            } else {
                r.lo = mid;
            }
        }
    }

    /// Refine every interval to width at most `width`.
    pub fn refine(&mut self, width: &BigRational) {
        for i in 0..self.intervals.len() {
            self.refine_root(i, width);
        }
    }
}

/// Split point of `(lo, hi)` that is not a root of `p`.
fn split_point(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let w = hi - lo;
    for den in 2i64.. {
        for num in 1..den {
            let m = lo + &w * BigRational::new(BigInt::from(num), BigInt::from(den));
            if p.sign_at(&m) != Sign::NoSign {
                return m;
            }
        }
    }
    unreachable!()
}

/// Isolate the distinct real roots of `f` with multiplicities.
pub fn isolate_real_roots(f: &IntPoly) -> IsolatedRoots {
    assert!(!f.is_zero(), "root isolation of the zero polynomial");
    let sqf = f.square_free_part();
    if sqf.is_constant() {
        return IsolatedRoots { sqf, intervals: Vec::new() };
    }
    let chain = SturmChain::new(&sqf);
    let b = BigRational::from_integer(sqf.cauchy_bound());
    let mut intervals: Vec<RootInterval> = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    // Endpoints are never roots, so (lo, hi] counts equal (lo, hi) counts.
    while let Some((lo, hi)) = stack.pop() {
        match chain.count_in(&lo, &hi) {
            0 => {}
            1 => intervals.push(RootInterval { lo, hi, multiplicity: 0 }),
            _ => {
                let m = split_point(&sqf, &lo, &hi);
                stack.push((lo, m.clone()));
                stack.push((m, hi));
            }
        }
    }
    intervals.sort_by(|a, b| a.lo.cmp(&b.lo));

    let factors = f.square_free_decomposition();
    for r in &mut intervals {
        r.multiplicity = factors
            .iter()
            .position(|g| {
                if r.is_exact() {
                    g.sign_at(&r.lo) == Sign::NoSign
                } else {
                    let sl = g.sign_at(&r.lo);
                    let sh = g.sign_at(&r.hi);
                    sl != sh
                }
            })
            .map(|i| i + 1)
            .expect("every root of the square-free part belongs to one factor");
    }
    IsolatedRoots { sqf, intervals }
}

/// Exact decision: every complex root of `f` is real and positive (`strict`)
/// or real and nonnegative (`!strict`), counted with multiplicity.
pub fn all_roots_real_positive(f: &MonicIntPoly, strict: bool) -> bool {
    all_roots_real_nonneg(&f.to_int_poly(), strict)
}

/// As [`all_roots_real_positive`] for any nonconstant integer polynomial.
pub fn all_roots_real_nonneg(f: &IntPoly, strict: bool) -> bool {
    let sqf = f.square_free_part();
    let chain = SturmChain::new(&sqf);
    let zero = BigRational::zero();
    let root_at_zero = sqf.sign_at(&zero) == Sign::NoSign;
    if strict && root_at_zero {
        return false;
    }
    let positive = chain.count_above(&zero);
    positive + usize::from(root_at_zero) == sqf.degree()
}

/// Exact decision: every complex root of `f` is real.
pub fn all_roots_real(f: &IntPoly) -> bool {
    let sqf = f.square_free_part();
    if sqf.is_constant() {
        return true;
    }
    SturmChain::new(&sqf).count_real() == sqf.degree()
}
