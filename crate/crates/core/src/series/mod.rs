//! Truncated power series over [`RingElement`](crate::ring::RingElement)
//! coefficients.

mod bivariate;
mod multi;
mod univariate;

pub use bivariate::Series2;
pub use multi::MSeries;
pub use univariate::Series1;

use crate::error::Result;

/// The law `F(z0, z1) = exp(log z0 + log z1)` determined by an exponential
/// with `exp(0) = 0` and linear coefficient a unit.
pub fn bivariate_from_exp(exp: &Series1) -> Result<Series2> {
    let log = exp.revert()?;
    let n = exp.order();
    let sum = &Series2::from_univariate(&log, 0) + &Series2::from_univariate(&log, 1);
    exp.compose_bivariate(&sum.truncate(n))
}
