//! The exact graded coefficient ring.

mod bernoulli;
mod element;
mod generator;
mod json;
mod monomial;
mod numeric;

pub use bernoulli::{bernoulli, factorial, zeta_tilde_even};
pub use element::{rat, RingElement};
pub use generator::Gen;
pub use json::{parse_rational, rational_string};
pub use monomial::Monomial;
pub use numeric::{euler_gamma, evaluate_numeric, pi, zeta_numeric, zeta_rational, MAX_PRECISION};

pub use num_rational::BigRational;
