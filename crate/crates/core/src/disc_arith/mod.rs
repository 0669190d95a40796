//! Arithmetic of discriminants: factorization, root counts of quadratics
//! modulo prime squares, square-free sieve brackets and discriminant
//! censuses.

mod arith;
mod census;
mod rho;
mod sieve;

pub use arith::{
    factorize, is_prime, is_squarefree, omega, omega_bound_check, prime_pi, primes_up_to, rad,
    totients,
};
pub use census::{
    census_p3_squarefree, count_almost_prime_disc, count_almost_prime_disc_box,
    count_p3_squarefree_plus, count_square_pairs, count_square_pairs_naive, cubic_disc,
    is_square_pair, phi_sum_constant, phi_sum_mod3, AlmostPrimeCount, SquarefreeCensus,
};
pub use rho::{
    legendre, rho_bound_holds, rho_bruteforce, rho_prime, rho_quadratic_prime_sq,
    rho_squarefree_sq, QuadPoly,
};
pub use sieve::{
    count_squarefree_values, feller_tornier, squarefree_sieve_bounds, SieveBracket, FT_TRUNCATION,
};
