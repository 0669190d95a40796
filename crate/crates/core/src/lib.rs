//! Exact census of monic integer polynomials whose roots are all real and
//! positive.
//!
//! The crate is organised by subsystem:
//!
//! * [`polycore`]: integer polynomials, discriminants, Sturm-sequence root
//!   isolation and the exact "all roots real and positive" decision.
//! * [`robinson`]: enumeration for arbitrary degree along the normalized
//!   derivative chain, with interlacing windows for each coefficient.
//! * [`cubic_census`]: closed-form integer counting for cubics, scaled
//!   cubics and bounded discriminants.
//! * [`maclaurin`]: counting sequences under Maclaurin-type inequalities and
//!   the constants of the corresponding asymptotic formulas.
//! * [`disc_arith`]: arithmetic functions, the `rho_f(p^2)` engine, square-free
//!   sieve brackets and discriminant censuses.
//! * [`certified`]: interval-valued real numbers with outward rounding.
//! * [`oracle`]: brute-force reference counts used to cross-check the above.

pub mod certified;
pub mod cubic_census;
pub mod disc_arith;
pub mod error;
pub mod maclaurin;
pub mod oracle;
pub mod polycore;
pub mod robinson;

pub use certified::CertifiedReal;
pub use error::{CensusError, Result};
pub use polycore::{IntPoly, IsolatedRoots, MonicIntPoly};
