use crate::error::{Error, Result};
use crate::fgl::{self, gamma_exponent};
use crate::ring::{factorial, rat, Gen, RingElement};
use crate::series::Series1;
use crate::symfun::Presentation;

use num_rational::BigRational;

/// Names accepted by [`genus_series`] besides the law catalog.
pub const SERIES_CATALOG: [&str; 4] = ["todd", "ahat", "gamma_raw", "gamma_normalized"];

/// A characteristic series `H(z) = z/exp(z)` with its exponential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusSeries {
    h: Series1,
    exp: Series1,
    name: String,
    presentation: Presentation,
}

impl GenusSeries {
    /// From an exponential known to order `M`; the result has order `M − 1`.
    pub fn from_exponential(
        name: impl Into<String>,
        exp: &Series1,
        presentation: Presentation,
    ) -> Result<Self> {
        if exp.order() < 2 || !exp.coeff(0).is_zero() || !exp.coeff(1).is_one() {
            return Err(Error::BadConstantTerm("exponential must be z + O(z²)"));
        }
        let n = exp.order() - 1;
        let quotient = Series1::from_fn(n, |k| exp.coeff(k + 1).clone());
        let h = quotient.inverse()?;
        Ok(GenusSeries {
            h,
            exp: exp.truncate(n),
            name: name.into(),
            presentation,
        })
    }

    /// From `H` with constant term 1; the exponential `z/H` is kept to the same order.
    pub fn from_h(name: impl Into<String>, h: Series1, presentation: Presentation) -> Result<Self> {
        if !h.coeff(0).is_one() {
            return Err(Error::BadConstantTerm(
                "characteristic series (needs H(0) = 1)",
            ));
        }
        let n = h.order();
        let inv = h.inverse()?;
        let exp = Series1::from_fn(n, |k| {
            if k == 0 {
                RingElement::zero()
            } else {
                inv.coeff(k - 1).clone()
            }
        });
        Ok(GenusSeries {
            h,
            exp,
            name: name.into(),
            presentation,
        })
    }

    pub fn h(&self) -> &Series1 {
        &self.h
    }

    pub fn exp(&self) -> &Series1 {
        &self.exp
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn presentation(&self) -> Presentation {
        self.presentation
    }

    pub fn order(&self) -> usize {
        self.h.order()
    }

    /// `log = revert(exp)`.
    pub fn logarithm(&self) -> Result<Series1> {
        self.exp.revert()
    }
}

/// `(x/2)/sinh(x/2)` to order `n`.
pub fn ahat_h(order: usize) -> Series1 {
    // sinh(x/2)/(x/2) = Σ x^{2k}/(4^k (2k+1)!)
    Series1::from_rationals(order, |k| {
        if k % 2 == 0 {
            BigRational::new(
                1.into(),
                factorial(k + 1) * num_bigint::BigInt::from(2).pow(k as u32),
            )
        } else {
            rat(0, 1)
        }
    })
    .inverse()
    .expect("constant term 1")
}

/// `Γ(1+z) = exp(−γz + Σ_{k≥2} ζ(k)(−z)^k/k)` (raw), or the same with
/// `z = x·(2πi)^{−1}` and even zetas reduced (normalized).
pub fn gamma_series(order: usize, presentation: Presentation) -> Result<GenusSeries> {
    if order < 2 {
        return Err(Error::OrderTooSmall { got: order, min: 2 });
    }
    let exponent = gamma_exponent(order).scale(&RingElement::int(-1));
    let raw = exponent.exp_series()?;
    match presentation {
        Presentation::Raw => GenusSeries::from_h("gamma_raw", raw, presentation),
        Presentation::Normalized => {
            let mut h = Series1::zero(order);
            for k in 0..=order {
                let scale = RingElement::gen_pow(Gen::Ipi2, -(k as i32))?;
                h.set_coeff(k, (raw.coeff(k) * &scale).reduce());
            }
            GenusSeries::from_h("gamma_normalized", h, presentation)
        }
    }
}

/// Characteristic series by name: Todd, Â, the two Γ presentations, or the
/// series `z/exp_F(z)` of any catalog law.
pub fn genus_series(name: &str, order: usize) -> Result<GenusSeries> {
    if order < 2 {
        return Err(Error::OrderTooSmall { got: order, min: 2 });
    }
    match name {
        "todd" => {
            // 1 − e^{−z}
            let exp =
                &Series1::one(order + 1) - &Series1::exp_linear(order + 1, &RingElement::int(-1));
            GenusSeries::from_exponential(name, &exp, Presentation::Raw)
        }
        "ahat" => GenusSeries::from_h(name, ahat_h(order), Presentation::Raw),
        "gamma_raw" => gamma_series(order, Presentation::Raw),
        "gamma_normalized" => gamma_series(order, Presentation::Normalized),
        law => {
            let f = fgl::catalog(law, order + 1)?;
            GenusSeries::from_exponential(law, &f.exponential()?, Presentation::Raw)
        }
    }
}
