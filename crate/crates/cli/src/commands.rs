//! Subcommand execution. Each subcommand yields report rows.

use census_core::certified::{int, tao_constant, DEFAULT_PREC};
use census_core::cubic_census::{
    count_p3_bounded_disc, count_p3_plus, count_p3_scaled, count_p3_zeroplus,
    main_term_and_error, w1_upper_bound, RationalScaling, Variant,
};
use census_core::disc_arith::{
    census_p3_squarefree, count_almost_prime_disc, count_almost_prime_disc_box,
    count_square_pairs, feller_tornier, phi_sum_constant, squarefree_sieve_bounds, QuadPoly,
};
use census_core::maclaurin::{
    binomial_bracket_holds, bracket_holds, count_attainable, count_sb, main_exponent,
    phi_psi_binomial, phi_psi_general, BSequence,
};
use census_core::robinson::{count_positive_real_monic, count_prefix3};
use census_core::CertifiedReal;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::args::{CensusCmd, Command, DiscCmd, GlobalOpts, SieveCmd};
use crate::report::{rational, CensusReport, Params};
use crate::{verify, CliError};

/// Largest trace accepted by the cubic censuses.
pub const MAX_CUBIC_TRACE: i64 = 10_000;

pub struct Output {
    pub rows: Vec<CensusReport>,
    pub diagnostics: Vec<String>,
}

impl From<Vec<CensusReport>> for Output {
    fn from(rows: Vec<CensusReport>) -> Self {
        Output { rows, diagnostics: Vec::new() }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn cubic_trace(a: i64) -> Result<(), CliError> {
    if a < 0 {
        return usage("negative traces are not supported");
    }
    if a > MAX_CUBIC_TRACE {
        return usage(format!(
            "refusing trace {a}: cubic censuses are limited to A <= {MAX_CUBIC_TRACE} \
             (the count grows like A^5/480 and the row loop like A^2)"
        ));
    }
    Ok(())
}

fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    match s.trim().parse::<BigRational>() {
        Ok(q) if q.is_positive() => Ok(q),
        _ => usage(format!("expected a positive rational p/q, got {s:?}")),
    }
}

fn q_int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `|count - main| <= err` at the upper end of `err`.
fn within(count: &BigInt, main: &BigRational, err: &CertifiedReal) -> bool {
    (q_int(count.clone()) - main).abs() <= *err.hi()
}

fn main_row(command: &str, params: Params, count: BigInt, main: BigRational, err: CertifiedReal) -> CensusReport {
    let ok = within(&count, &main, &err);
    CensusReport::new(command, params)
        .count(count)
        .main_term(rational(&main))
        .error_bound(&err)
        .within(ok)
}

pub fn execute(cmd: &Command, global: &GlobalOpts) -> Result<Output, CliError> {
    match cmd {
        Command::Census(c) => census(c).map(Output::from),
        Command::Attainable { n, trace, bseq } => attainable(*n, *trace, bseq.as_deref()).map(Output::from),
        Command::Disc(d) => disc(d).map(Output::from),
        Command::Sieve(SieveCmd::Quad { a, b, c, x, y, z }) => sieve_quad(*a, *b, *c, *x, *y, *z).map(Output::from),
        Command::Constants { n, truncation } => constants(*n, *truncation).map(Output::from),
        Command::Verify { suite } => verify::run_suite(*suite, global.seed),
    }
}

fn census(cmd: &CensusCmd) -> Result<Vec<CensusReport>, CliError> {
    match cmd {
        CensusCmd::Cubic { trace, scaled, nonneg } => {
            let a = *trace;
            cubic_trace(a)?;
            let variant = if *nonneg { Variant::Nonneg } else { Variant::Strict };
            let mut params = Params::new().with("trace", a);
            let scaling = match scaled {
                Some(v) => {
                    let w: Vec<BigRational> = v.iter().map(|s| parse_rational(s)).collect::<Result<_, _>>()?;
                    params = params
                        .with("alpha", rational(&w[0]))
                        .with("beta", rational(&w[1]))
                        .with("gamma", rational(&w[2]));
                    Some(RationalScaling::new(w[0].clone(), w[1].clone(), w[2].clone())?)
                }
                None => None,
            };
            params = params.with("variant", if *nonneg { "nonneg" } else { "strict" });
            let (count, main, err) = match (&scaling, variant) {
                (None, Variant::Strict) => {
                    let a3 = q_int(a).pow(3);
                    let main = q_int(a).pow(5) / q_int(480);
                    (BigInt::from(count_p3_plus(a)), main, CertifiedReal::exact(a3 * q_int(2)))
                }
                (None, Variant::Nonneg) => {
                    let (m, e) = main_term_and_error(a, &RationalScaling::identity(), variant);
                    (BigInt::from(count_p3_zeroplus(a)), m, e)
                }
                (Some(s), _) => {
                    let (m, e) = main_term_and_error(a, s, variant);
                    (BigInt::from(count_p3_scaled(a, s, variant)), m, e)
                }
            };
            Ok(vec![main_row("census cubic", params, count, main, err)])
        }
        CensusCmd::Robinson { n, trace } => {
            if *n == 0 || *trace < 0 {
                return usage("need n >= 1 and a nonnegative trace");
            }
            let count = count_positive_real_monic(*n, *trace, true);
            let params = Params::new().with("n", n).with("trace", trace);
            Ok(vec![CensusReport::new("census robinson", params).count(count)])
        }
        CensusCmd::Prefix3 { n, trace } => {
            cubic_trace(*trace)?;
            let count = BigInt::from(count_prefix3(*n, *trace)?);
            let (a, nq) = (q_int(*trace), q_int(*n as i64));
            let one = q_int(1);
            let main = BigRational::new(27.into(), 640.into())
                * (&one - nq.recip()).pow(2)
                * (&one - q_int(2) / &nq)
                * a.pow(5);
            let err = BigRational::new(9.into(), 2.into()) * a.pow(3)
                + BigRational::new(3.into(), 2.into()) * &nq * a.pow(2)
                + q_int(3) * &a;
            let params = Params::new().with("n", n).with("trace", trace);
            Ok(vec![main_row("census prefix3", params, count, main, CertifiedReal::exact(err))])
        }
    }
}

fn attainable(n: usize, a: u64, bseq: Option<&str>) -> Result<Vec<CensusReport>, CliError> {
    if n < 2 || a == 0 {
        return usage("need n >= 2 and trace >= 1");
    }
    let t = main_exponent(n);
    let at = q_int(BigInt::from(a).pow(t));
    let at2 = q_int(BigInt::from(a).pow(t - 2));
    let mut params = Params::new().with("n", n).with("trace", a);
    let row = match bseq {
        None => {
            let count = count_attainable(n, a)?;
            let (phi, psi) = phi_psi_binomial(n)?;
            let ok = binomial_bracket_holds(n, a, &count)?;
            CensusReport::new("attainable", params)
                .count(&count)
                .main_term(rational(&(phi * at)))
                .error_bound(&psi.to_certified(DEFAULT_PREC).scale(&at2))
                .within(ok)
        }
        Some(s) => {
            let b: Vec<BigRational> = s.split(',').map(parse_rational).collect::<Result<_, _>>()?;
            if b.len() + 1 != n {
                return usage(format!("--bseq needs n - 1 = {} entries, got {}", n - 1, b.len()));
            }
            params = params.with("bseq", b.iter().map(rational).collect::<Vec<_>>().join(","));
            let bs = BSequence::from_rationals(&b)?;
            let count = count_sb(a, &bs)?;
            let consts = phi_psi_general(&bs);
            let ok = bracket_holds(&count, &consts, a, t)?;
            let main = match consts.phi.to_rational() {
                Some(phi) => rational(&(phi * &at)),
                None => format!("{} * {}", consts.phi, rational(&at)),
            };
            let main_approx = consts.phi_certified(DEFAULT_PREC).scale(&at);
            CensusReport::new("attainable", params)
                .count(&count)
                .main_term(main)
                .error_bound(&consts.psi_certified(DEFAULT_PREC).scale(&at2))
                .lower(&main_approx)
                .upper(&main_approx)
                .within(ok)
        }
    };
    Ok(vec![row])
}

fn disc(cmd: &DiscCmd) -> Result<Vec<CensusReport>, CliError> {
    let row = match cmd {
        DiscCmd::Bounded { a, b, d } => {
            let count = count_p3_bounded_disc(*a, *b, *d);
            let w = w1_upper_bound(*a, *b, *d)?;
            let bound = w.piecewise.unwrap_or(w.global);
            let ok = int(count) <= *bound.hi();
            let params = Params::new().with("a", a).with("b", b).with("d", d);
            CensusReport::new("disc bounded", params).count(count).upper(&bound).within(ok)
        }
        DiscCmd::Squarefree { trace } => {
            cubic_trace(*trace)?;
            let c = census_p3_squarefree(*trace, true)?;
            let floor = BigRational::new(3.into(), 100_000.into()) * q_int(*trace).pow(5);
            let ok = int(c.count) >= floor;
            let params = Params::new().with("trace", trace);
            CensusReport::new("disc squarefree", params)
                .count(c.count)
                .lower(&CertifiedReal::exact(floor))
                .within(ok)
        }
        DiscCmd::Almostprime { h, a, b, k } => match (a, b) {
            (Some(a), Some(b)) => {
                let r = count_almost_prime_disc(*a, *b, *h, *k)?;
                let params = Params::new().with("a", a).with("b", b).with("h", h).with("k", k);
                CensusReport::new("disc almostprime", params).count(r.count)
            }
            _ => {
                let count = count_almost_prime_disc_box(*h, *k)?;
                let params = Params::new().with("h", h).with("k", k);
                CensusReport::new("disc almostprime", params).count(count)
            }
        },
        DiscCmd::Squares { h } => {
            let count = count_square_pairs(*h)?;
            CensusReport::new("disc squares", Params::new().with("h", h)).count(count)
        }
    };
    Ok(vec![row])
}

fn sieve_quad(a: i64, b: i64, c: i64, x: i64, y: i64, z: i64) -> Result<Vec<CensusReport>, CliError> {
    // [x, y] on the command line is (x - 1, y] in the library
    let f = QuadPoly::new(a, b, c);
    let s = squarefree_sieve_bounds(&f, x - 1, y, z)?;
    let params = Params::new()
        .with("a", a)
        .with("b", b)
        .with("c", c)
        .with("x", x)
        .with("y", y)
        .with("z", z);
    let row = CensusReport::new("sieve quad", params)
        .count(s.empirical)
        .lower(&s.lower)
        .upper(&s.upper)
        .within(s.lower_holds() && s.upper_holds());
    Ok(vec![row])
}

fn constant_row(params: Params, exact: Option<String>, value: &CertifiedReal) -> CensusReport {
    let mut r = CensusReport::new("constants", params).lower(value).upper(value);
    if let Some(e) = exact {
        r = r.main_term(e);
    }
    r
}

fn constants(n: usize, truncation: u64) -> Result<Vec<CensusReport>, CliError> {
    let (phi, psi) = phi_psi_binomial(n)?;
    let prec = DEFAULT_PREC;
    let mut rows = vec![
        constant_row(
            Params::new().with("name", "phi").with("n", n),
            Some(rational(&phi)),
            &CertifiedReal::exact(phi.clone()),
        ),
        constant_row(Params::new().with("name", "psi").with("n", n), Some(psi.to_string()), &psi.to_certified(prec)),
        constant_row(
            Params::new().with("name", "feller_tornier").with("truncation", truncation),
            None,
            &feller_tornier(truncation)?,
        ),
        constant_row(Params::new().with("name", "real_root_constant"), Some("160 * e^7".into()), &tao_constant(prec)),
    ];
    for r in [0, 1] {
        let label = if r == 0 { "3/(4 pi^2)" } else { "9/(8 pi^2)" };
        rows.push(constant_row(
            Params::new().with("name", "totient_density").with("residue", r),
            Some(label.into()),
            &phi_sum_constant(r, prec),
        ));
    }
    Ok(rows)
}
