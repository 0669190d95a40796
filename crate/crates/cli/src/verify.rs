//! The acceptance checks. Each criterion runs standalone and reports
//! whether it passed, how many cases it covered and notes on failures.

use census_core::certified::{int, rat, CertifiedReal, DEFAULT_PREC};
use census_core::cubic_census::{
    count_p3_bounded_disc, count_p3_plus, count_p3_scaled, main_term_and_error, w1_upper_bound,
    RationalScaling, Variant,
};
use census_core::disc_arith::*;
use census_core::maclaurin::*;
use census_core::oracle::{p3_pair_bruteforce, p3_plus_bruteforce};
use census_core::robinson::{binomial, count_positive_real_monic, count_prefix3};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::args::Suite;
use crate::commands::Output;
use crate::report::{CensusReport, Params};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub cases: u64,
    pub notes: Vec<String>,
}

pub const ALL: [u8; 16] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16];

pub fn criteria(suite: Suite) -> Vec<u8> {
    match suite {
        Suite::Cubic => vec![1, 2, 5, 11],
        Suite::Maclaurin => vec![3, 4, 6, 7, 12],
        Suite::Disc => vec![8, 9, 10, 13, 14, 15],
        Suite::All => ALL.to_vec(),
    }
}

fn suite_of(id: u8) -> &'static str {
    match id {
        1 | 2 | 5 | 11 => "cubic",
        3 | 4 | 6 | 7 | 12 => "maclaurin",
        16 => "all",
        _ => "disc",
    }
}

pub fn title(id: u8) -> &'static str {
    match id {
        1 => "cubic census equals root-isolation oracle",
        2 => "cubic census main-term bracket",
        3 => "attainable count main-term bracket",
        4 => "positive-real count bounded by attainable count",
        5 => "scaled and prefix cubic brackets",
        6 => "t and u closed forms equal recurrences",
        7 => "product simplification identities",
        8 => "rho engine, multiplicativity and rho bound",
        9 => "square-free quadratic values within sieve bracket",
        10 => "square-free discriminant census lower bound",
        11 => "bounded-discriminant upper bound with one point slack",
        12 => "real-rooted growth constants",
        13 => "totient sums by residue class",
        14 => "Feller-Tornier constant enclosure",
        15 => "square pairs and almost-prime box growth",
        16 => "output identical across worker counts",
        _ => "unknown",
    }
}

struct Tally {
    cases: u64,
    notes: Vec<String>,
    failed: bool,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, notes: Vec::new(), failed: false }
    }

    /// Record one case; keeps the first few failure messages.
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed = true;
            if self.notes.len() < 5 {
                self.notes.push(msg());
            }
        }
    }

    fn note(&mut self, msg: String) {
        self.notes.push(msg);
    }

    fn finish(self, id: u8) -> Outcome {
        Outcome { id, title: title(id), pass: !self.failed, cases: self.cases, notes: self.notes }
    }
}

type Res = Result<Outcome, CliError>;

pub fn check(id: u8, seed: u64) -> Res {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (id as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    match id {
        1 => cubic_oracle(),
        2 => cubic_bracket(),
        3 => attainable_bracket(),
        4 => robinson_below_attainable(),
        5 => scaled_brackets(),
        6 => t_and_u(),
        7 => simplification(&mut rng),
        8 => rho_engine(&mut rng),
        9 => sieve_bracket(),
        10 => squarefree_census(),
        11 => bounded_disc(),
        12 => growth_constants(&mut rng),
        13 => totient_sums(),
        14 => feller_tornier_enclosure(),
        15 => square_pairs(),
        16 => determinism(),
        _ => Err(CliError::Usage(format!("no criterion {id}"))),
    }
}

pub fn run_criteria(ids: &[u8], seed: u64) -> Result<Vec<Outcome>, CliError> {
    ids.iter().map(|&id| check(id, seed)).collect()
}

pub fn run_suite(suite: Suite, seed: u64) -> Result<Output, CliError> {
    let outcomes = run_criteria(&criteria(suite), seed)?;
    let mut diagnostics = Vec::new();
    let rows = outcomes
        .iter()
        .map(|o| {
            let status = if o.pass { "pass" } else { "FAIL" };
            diagnostics.push(format!("criterion {:>2} {status}: {} ({} cases)", o.id, o.title, o.cases));
            for n in &o.notes {
                diagnostics.push(format!("    {n}"));
            }
            let params = Params::new().with("criterion", o.id).with("suite", suite_of(o.id));
            CensusReport::new("verify", params).count(o.cases).within(o.pass)
        })
        .collect();
    Ok(Output { rows, diagnostics })
}

fn qi(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn cubic_oracle() -> Res {
    let mut t = Tally::new();
    for a in 1..=40 {
        let fast = count_p3_plus(a);
        let slow = p3_plus_bruteforce(a) as u128;
        t.check(fast == slow, || format!("A = {a}: census {fast}, oracle {slow}"));
    }
    for (a, want) in [(1, 0), (3, 1), (6, 16)] {
        let got = count_p3_plus(a);
        t.check(got == want, || format!("A = {a}: {got}, expected {want}"));
    }
    Ok(t.finish(1))
}

fn cubic_bracket() -> Res {
    let mut t = Tally::new();
    for a in 1..=300i64 {
        let c = count_p3_plus(a) as i128;
        let a = a as i128;
        // |c - A^5/480| <= 2 A^3, cleared of the denominator
        t.check((480 * c - a.pow(5)).abs() <= 960 * a.pow(3), || format!("A = {a}: count {c}"));
    }
    Ok(t.finish(2))
}

fn attainable_bracket() -> Res {
    let mut t = Tally::new();
    for (n, top) in [(2usize, 1000u64), (3, 25), (4, 6)] {
        for a in 1..=top {
            let c = count_attainable(n, a)?;
            let ok = binomial_bracket_holds(n, a, &c)?;
            t.check(ok, || format!("n = {n}, A = {a}: count {c}"));
        }
    }
    let (phi, psi) = phi_psi_binomial(3)?;
    t.check(phi == rat(2, 405), || format!("Phi_3 = {phi}"));
    let want = ExponentVector::from_int(2).mul(&ExponentVector::from_int(3).pow(&rat(-3, 2)));
    t.check(psi == want, || format!("Psi_3 = {psi}"));
    Ok(t.finish(3))
}

fn robinson_below_attainable() -> Res {
    let mut t = Tally::new();
    for n in 2..=4usize {
        for a in 1..=8 {
            let r = BigInt::from(count_positive_real_monic(n, a, true));
            let s = count_attainable(n, a as u64)?;
            t.check(r <= s, || format!("n = {n}, A = {a}: {r} > {s}"));
        }
    }
    Ok(t.finish(4))
}

fn scaled_brackets() -> Res {
    let mut t = Tally::new();
    let id = RationalScaling::identity();
    for a in 1..=300 {
        for v in [Variant::Strict, Variant::Nonneg] {
            let c = qi(count_p3_scaled(a, &id, v));
            let (m, e) = main_term_and_error(a, &id, v);
            t.check((&c - &m).abs() <= *e.hi(), || format!("A = {a}, {v:?}: count {c}"));
        }
    }
    for n in [4usize, 5] {
        let nq = qi(n as i64);
        let lead = rat(27, 640) * (qi(1) - nq.recip()).pow(2) * (qi(1) - qi(2) / &nq);
        for a in 1..=20i64 {
            let c = qi(count_prefix3(n, a)?);
            let aq = qi(a);
            let main = &lead * aq.pow(5);
            let err = rat(9, 2) * aq.pow(3) + rat(3, 2) * &nq * aq.pow(2) + qi(3) * &aq;
            t.check((&c - &main).abs() <= err, || format!("prefix n = {n}, A = {a}: count {c}"));
        }
    }
    Ok(t.finish(5))
}

fn t_and_u() -> Res {
    let mut t = Tally::new();
    for n in 2..=50 {
        let (ts, us) = (t_sequence(n), u_sequence(n));
        t.check(ts == t_recurrence(n), || format!("t differs at n = {n}"));
        t.check(us == u_recurrence(n), || format!("u differs at n = {n}"));
        t.check(&ts[n - 1] - &us[n - 2] == qi(2), || format!("t - u != 2 at n = {n}"));
    }
    Ok(t.finish(6))
}

fn simplification(rng: &mut ChaCha8Rng) -> Res {
    let mut t = Tally::new();
    for n in 2..=6u64 {
        let ds: Vec<BigRational> = (1..=n).map(|k| qi(binomial(n, k))).collect();
        t.check(check_simplification(&ds)?, || format!("binomial n = {n}"));
    }
    for _ in 0..20 {
        let len = rng.gen_range(2..=6);
        let ds: Vec<BigRational> =
            (0..len).map(|_| rat(rng.gen_range(1..=60), rng.gen_range(1..=60))).collect();
        let ok = check_simplification(&ds)?;
        t.check(ok, || format!("D = {ds:?}"));
    }
    let ds: Vec<BigRational> = (1..=4).map(|k| qi(binomial(4, k))).collect();
    let r = simplification_report(&ds)?;
    if !r.first_printed || !r.second_printed {
        t.note("printed exponents fail for binomial n = 4; the derived forms are checked".into());
    }
    Ok(t.finish(7))
}

const SMALL_PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

/// Random quadratics; every third has `p | A` and every third `p | gcd`.
pub fn sample_quadratics(rng: &mut ChaCha8Rng, count: usize) -> Vec<QuadPoly> {
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p = SMALL_PRIMES[rng.gen_range(0..SMALL_PRIMES.len())] as i64;
        let mut c = [0i64; 3];
        for v in &mut c {
            *v = rng.gen_range(-300..=300);
        }
        match out.len() % 3 {
            1 => c[0] *= p,
            2 => c.iter_mut().for_each(|v| *v *= p),
            _ => {}
        }
        let f = QuadPoly::new(c[0], c[1], c[2]);
        if !f.is_zero() {
            out.push(f);
        }
    }
    out
}

fn rho_engine(rng: &mut ChaCha8Rng) -> Res {
    let mut t = Tally::new();
    let quads = sample_quadratics(rng, 500);
    for f in &quads {
        for p in SMALL_PRIMES {
            let fast = rho_quadratic_prime_sq(f, p)?;
            let slow = rho_bruteforce(f, p * p);
            t.check(fast == slow, || format!("{f} at p = {p}: {fast} vs {slow}"));
        }
        for (i, &p) in SMALL_PRIMES[..5].iter().enumerate() {
            for &q in &SMALL_PRIMES[i + 1..5] {
                let joint = rho_bruteforce(f, p * p * q * q);
                let split = rho_quadratic_prime_sq(f, p)? * rho_quadratic_prime_sq(f, q)?;
                t.check(joint == split, || format!("{f}: rho({p}^2 {q}^2) = {joint}, product {split}"));
            }
        }
        if f.discriminant() != 0 {
            for d in [3u64, 5, 7, 15, 21, 35, 105] {
                if d.gcd(&f.a.unsigned_abs()) == 1 {
                    t.check(rho_bound_holds(f, d)?, || format!("{f}: bound fails at d = {d}"));
                }
            }
        }
    }
    Ok(t.finish(8))
}

pub const SIEVE_QUADRATICS: [(i64, i64, i64); 10] = [
    (1, 0, -2),
    (1, 0, -3),
    (1, 1, -1),
    (1, 0, -5),
    (1, 3, 1),
    (1, 0, -7),
    (1, -1, -3),
    (2, 0, -3),
    (3, 1, -2),
    (1, 0, -6),
];

fn sieve_bracket() -> Res {
    let mut t = Tally::new();
    let (mut upper_fail, mut lower_fail, mut sieve_fail) = (0, 0, 0);
    for (a, b, c) in SIEVE_QUADRATICS {
        let f = QuadPoly::new(a, b, c);
        for z in [7, 11, 13] {
            let s = squarefree_sieve_bounds(&f, 0, 10_000, z)?;
            lower_fail += u32::from(!s.lower_holds());
            upper_fail += u32::from(!s.upper_holds());
            sieve_fail += u32::from(!s.upper_sieve_holds());
            t.check(s.lower_holds() && s.upper_holds(), || {
                format!(
                    "{f}, z = {z}: count {} outside [{}, {}]",
                    s.empirical,
                    s.lower.lo_decimal(1),
                    s.upper.hi_decimal(1)
                )
            });
        }
    }
    t.note(format!(
        "failures: lower {lower_fail}, stated upper {upper_fail}, upper with exact local factors {sieve_fail}"
    ));
    Ok(t.finish(9))
}

fn squarefree_census() -> Res {
    let mut t = Tally::new();
    for a in [20i64, 30, 40] {
        let c = census_p3_squarefree(a, true)?;
        let ok = qi(c.count) * qi(100_000) >= qi(3) * qi(a).pow(5);
        t.check(ok, || format!("A = {a}: {} below 3e-5 A^5", c.count));
    }
    for a in [12i64, 30] {
        let with = census_p3_squarefree(a, true)?;
        let without = census_p3_squarefree(a, false)?;
        t.check(with.skipped > 0 && with.count == without.count, || {
            format!("A = {a}: prefiltered {} vs full {}", with.count, without.count)
        });
    }
    Ok(t.finish(10))
}

fn bounded_disc() -> Res {
    let mut t = Tally::new();
    let one = qi(1);
    let (mut over_two, mut worst) = (0u32, BigRational::zero());
    for a in -30..=30i64 {
        for b in -30..=30i64 {
            for k in 0..=6 {
                let d = 10i64.pow(k);
                let c = qi(count_p3_bounded_disc(a, b, d));
                let w = w1_upper_bound(a, b, d)?;
                let mut bounds = vec![("global", w.global)];
                if let Some(p) = w.piecewise {
                    bounds.push(("piecewise", p));
                }
                for (name, bound) in &bounds {
                    let excess = &c - bound.hi();
                    if excess > worst {
                        worst = excess.clone();
                    }
                    over_two += u32::from(excess > qi(2));
                    t.check(excess <= one, || {
                        format!("({a}, {b}, {d}): count {c} > {name} {} + 1", bound.hi_decimal(3))
                    });
                }
            }
        }
    }
    let c = count_p3_bounded_disc(3, 1, 100);
    let w = w1_upper_bound(3, 1, 100)?;
    let p = w.piecewise.clone().expect("A^2 - 3B = 6");
    let reproduced = c == 3 && qi(3) > *p.hi() && p.hi_decimal(3) == "2.178";
    t.check(reproduced, || format!("(3, 1, 100): count {c}, bound {}", p.hi_decimal(3)));
    t.note(format!(
        "largest excess over the bound {}, points beyond +2 slack: {over_two}",
        CertifiedReal::exact(worst).hi_decimal(5)
    ));
    Ok(t.finish(11))
}

fn growth_constants(rng: &mut ChaCha8Rng) -> Res {
    let mut t = Tally::new();
    for _ in 0..1000 {
        let n = rng.gen_range(2..=8);
        let roots: Vec<BigRational> =
            (0..n).map(|_| rat(rng.gen_range(-30..=30), rng.gen_range(1..=8))).collect();
        let ok = tao_inequality_check(&roots)?;
        t.check(ok, || format!("roots {roots:?}"));
    }
    for a1 in -6..=6i64 {
        for a2 in -6..=6i64 {
            let count = p3_pair_bruteforce(a1, a2);
            let b = tao_upper_bound(3, &BigInt::from(a1), &BigInt::from(a2), DEFAULT_PREC)?;
            let ok = b.m_statement == b.m_proof && int(count) <= *b.bound.hi();
            t.check(ok, || format!("(A1, A2) = ({a1}, {a2}): count {count}, bound {}", b.bound.hi_decimal(3)));
        }
    }
    Ok(t.finish(12))
}

fn totient_sums() -> Res {
    let mut t = Tally::new();
    let n = 1_000_000u64;
    let n2 = qi(n).pow(2);
    for r in 0..3u32 {
        let s = qi(phi_sum_mod3(n, r)?);
        let c = phi_sum_constant(r, DEFAULT_PREC);
        let lo = rat(98, 100) * c.hi() * &n2;
        let hi = rat(102, 100) * c.lo() * &n2;
        t.check(s >= lo && s <= hi, || format!("residue {r}: sum {s}"));
    }
    t.check(phi_sum_mod3(10, 0)? == BigInt::from(10), || "phi_sum(10, 0) != 10".into());
    t.check(phi_sum_mod3(10, 1)? == BigInt::from(13), || "phi_sum(10, 1) != 13".into());
    Ok(t.finish(13))
}

fn feller_tornier_enclosure() -> Res {
    let mut t = Tally::new();
    let c = feller_tornier(FT_TRUNCATION)?;
    let ok = *c.lo() > rat(32, 100) && *c.hi() < rat(33, 100);
    t.check(ok, || format!("enclosure [{}, {}]", c.lo_decimal(6), c.hi_decimal(6)));
    Ok(t.finish(14))
}

fn square_pairs() -> Res {
    let mut t = Tally::new();
    for h in 2..=200 {
        let (fast, slow) = (count_square_pairs(h)?, count_square_pairs_naive(h));
        t.check(fast == slow, || format!("H = {h}: {fast} vs {slow}"));
    }
    for h in [1_000i64, 10_000, 100_000] {
        let c = qi(count_square_pairs(h)?);
        let ln = CertifiedReal::ln_rational(&qi(h), DEFAULT_PREC)?.scale(&qi(h));
        let ok = c >= rat(1, 2) * ln.hi() && c <= qi(3) * ln.lo();
        t.check(ok, || format!("H = {h}: {c} outside [0.5, 3] H log H"));
    }
    let boxes: Vec<u64> = [20, 40, 80].iter().map(|&h| count_almost_prime_disc_box(h, 2)).collect::<Result<_, _>>()?;
    for w in boxes.windows(2) {
        t.check(w[1] >= 4 * w[0], || format!("box census {} -> {} grows by less than 4", w[0], w[1]));
    }
    Ok(t.finish(15))
}

/// Census commands compared byte for byte across worker counts.
pub const DETERMINISM_COMMANDS: [&str; 12] = [
    "census cubic --trace 30",
    "census cubic --trace 12 --scaled 3/4 1/2 1/4 --nonneg",
    "census robinson --n 4 --trace 8",
    "census prefix3 --n 5 --trace 15",
    "attainable --n 3 --trace 12",
    "attainable --n 3 --trace 8 --bseq 1/4,2/3",
    "disc bounded --a 3 --b 1 --d 100",
    "disc squarefree --trace 15",
    "disc almostprime --h 12",
    "disc squares --h 500",
    "sieve quad --a 1 --b 0 --c -2 --x 1 --y 2000 --z 11",
    "constants --n 4 --format json",
];

fn determinism() -> Res {
    let mut t = Tally::new();
    for cmd in DETERMINISM_COMMANDS {
        let outputs: Vec<(i32, Vec<u8>)> = [1, 2, 8]
            .iter()
            .map(|w| {
                let mut argv = vec!["census".to_string()];
                argv.extend(cmd.split_whitespace().map(String::from));
                argv.extend(["--workers".to_string(), w.to_string()]);
                let (mut out, mut err) = (Vec::new(), Vec::new());
                let code = crate::run(argv, &mut out, &mut err);
                (code, out)
            })
            .collect();
        let ok = outputs[0].0 == 0 && outputs.iter().all(|o| *o == outputs[0]);
        t.check(ok, || format!("`{cmd}` differs across worker counts"));
    }
    Ok(t.finish(16))
}
