use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::fgl::{Construction, FormalGroupLaw};
use crate::ring::{factorial, rat, Gen, RingElement};
use crate::series::{bivariate_from_exp, Series1, Series2};

/// Catalog identifiers accepted by [`catalog`].
pub const CATALOG: [&str; 10] = [
    "additive",
    "multiplicative",
    "multiplicative_t",
    "kontsevich",
    "hyperbolic",
    "jacobi",
    "gamma_raw",
    "gamma_normalized",
    "chi_rescaled",
    "universal_additive",
];

/// Name of the built-in law that violates associativity.
pub const BROKEN_DEMO: &str = "broken-demo";

fn symbolic(gens: &[Gen]) -> BTreeMap<String, RingElement> {
    gens.iter()
        .map(|&g| (g.to_string(), RingElement::gen(g)))
        .collect()
}

fn from_exponential(
    name: &str,
    exp: &Series1,
    params: BTreeMap<String, RingElement>,
) -> Result<FormalGroupLaw> {
    FormalGroupLaw::new(
        name,
        bivariate_from_exp(exp)?,
        params,
        Construction::FromExponential,
    )
}

/// Builds the law of the named catalog entry to total degree `order`.
pub fn catalog(name: &str, order: usize) -> Result<FormalGroupLaw> {
    if order < 2 {
        return Err(Error::OrderTooSmall { got: order, min: 2 });
    }
    let n = order;
    let t = RingElement::gen(Gen::T);
    match name {
        "additive" => FormalGroupLaw::new(
            name,
            &Series2::z0(n) + &Series2::z1(n),
            BTreeMap::new(),
            Construction::ClosedForm,
        ),
        "multiplicative" => {
            let f = law_from_germ(n, &RingElement::one(), |u, v| Ok(u * v))?;
            FormalGroupLaw::new(name, f, BTreeMap::new(), Construction::FromGerm)
        }
        "multiplicative_t" => {
            let f = law_from_germ(n, &t, |u, v| Ok(u * v))?;
            FormalGroupLaw::new(name, f, symbolic(&[Gen::T]), Construction::FromGerm)
        }
        "kontsevich" => {
            let closed = kontsevich_closed_form(n);
            let germ = kontsevich_from_germ(n)?;
            if closed != germ {
                return Err(Error::InvalidArgument(
                    "kontsevich closed form and germ construction disagree".into(),
                ));
            }
            FormalGroupLaw::new(name, germ, symbolic(&[Gen::T]), Construction::FromGerm)
        }
        "hyperbolic" => from_exponential(name, &hyperbolic_exponential(n), BTreeMap::new()),
        "jacobi" => FormalGroupLaw::new(
            name,
            jacobi_closed_form(n)?,
            symbolic(&[Gen::Delta, Gen::Epsilon]),
            Construction::ClosedForm,
        ),
        "gamma_raw" => from_exponential(name, &gamma_exponential(n), BTreeMap::new()),
        "gamma_normalized" => {
            from_exponential(name, &gamma_exponential_normalized(n)?, BTreeMap::new())
        }
        "chi_rescaled" => FormalGroupLaw::new(
            name,
            chi_rescaled_closed_form(n)?,
            symbolic(&[Gen::U]),
            Construction::ClosedForm,
        ),
        "universal_additive" => from_exponential(name, &universal_exponential(n), BTreeMap::new()),
        BROKEN_DEMO => Err(Error::UnknownLaw(format!(
            "{name} is not a catalog law; use broken_demo"
        ))),
        _ => Err(Error::UnknownLaw(name.to_string())),
    }
}

/// Catalog lookup that also accepts [`BROKEN_DEMO`].
pub fn lookup(name: &str, order: usize) -> Result<FormalGroupLaw> {
    if name == BROKEN_DEMO {
        broken_demo(order)
    } else {
        catalog(name, order)
    }
}

/// `z0 + z1 + z0²z1²`: unital and commutative, not associative.
pub fn broken_demo(order: usize) -> Result<FormalGroupLaw> {
    if order < 2 {
        return Err(Error::OrderTooSmall { got: order, min: 2 });
    }
    let z0 = Series2::z0(order);
    let z1 = Series2::z1(order);
    let z0z1 = &z0 * &z1;
    let f = &(&z0 + &z1) + &(&z0z1 * &z0z1);
    FormalGroupLaw::new(BROKEN_DEMO, f, BTreeMap::new(), Construction::ClosedForm)
}

/// Transports a group germ at `[1:1]` to the coordinate `z = s^{−1}(u − 1)`,
/// i.e. `u = 1 + s·z`, and returns the law `s^{−1}(G(u, v) − 1)`.
pub fn law_from_germ(
    order: usize,
    s: &RingElement,
    germ: impl Fn(&Series2, &Series2) -> Result<Series2>,
) -> Result<Series2> {
    let s_inv = s
        .inverse_unit()
        .ok_or_else(|| Error::NotAUnit(s.to_string()))?;
    let one = Series2::constant(order, RingElement::one());
    let u = &one + &Series2::z0(order).scale(s);
    let v = &one + &Series2::z1(order).scale(s);
    Ok((&germ(&u, &v)? - &one).scale(&s_inv))
}

/// `(z0 + z1 + (1+t)z0z1)/(1 − t z0z1)`.
pub fn kontsevich_closed_form(order: usize) -> Series2 {
    let t = RingElement::gen(Gen::T);
    let z0 = Series2::z0(order);
    let z1 = Series2::z1(order);
    let z0z1 = &z0 * &z1;
    let num = &(&z0 + &z1) + &z0z1.scale(&(&RingElement::one() + &t));
    let den = &Series2::constant(order, RingElement::one()) - &z0z1.scale(&t);
    num.try_div(&den).expect("constant term 1 is a unit")
}

/// The germ `uv/(1 − t(u−1)(v−1))` in the coordinate `z = u − 1`.
pub fn kontsevich_from_germ(order: usize) -> Result<Series2> {
    let t = RingElement::gen(Gen::T);
    law_from_germ(order, &RingElement::one(), |u, v| {
        let one = Series2::constant(order, RingElement::one());
        let du = u - &one;
        let dv = v - &one;
        let den = &one - &(&du * &dv).scale(&t);
        (u * v).try_div(&den)
    })
}

/// `2 sinh(z/2) = Σ z^{2k+1} / (4^k (2k+1)!)`.
pub fn hyperbolic_exponential(order: usize) -> Series1 {
    Series1::from_rationals(order, |k| {
        if k % 2 == 1 {
            BigRational::new(
                1.into(),
                factorial(k) * num_bigint::BigInt::from(2).pow(k as u32 - 1),
            )
        } else {
            rat(0, 1)
        }
    })
}

/// Euler's addition formula for Jacobi's quartic `R² = 1 − 2δz² + εz⁴`.
pub fn jacobi_closed_form(order: usize) -> Result<Series2> {
    let delta = RingElement::gen(Gen::Delta);
    let eps = RingElement::gen(Gen::Epsilon);
    let mut quartic = Series1::one(order);
    if order >= 2 {
        quartic.set_coeff(2, delta.scale(&rat(-2, 1)));
    }
    if order >= 4 {
        quartic.set_coeff(4, eps.clone());
    }
    let r = quartic.sqrt_series()?;
    let z0 = Series2::z0(order);
    let z1 = Series2::z1(order);
    let num = &(&z0 * &Series2::from_univariate(&r, 1)) + &(&z1 * &Series2::from_univariate(&r, 0));
    let z0z1 = &z0 * &z1;
    let den = &Series2::constant(order, RingElement::one()) - &(&z0z1 * &z0z1).scale(&eps);
    num.try_div(&den)
}

/// The law `(z0 + z1 + (u+u⁻¹)z0z1)/(1 − z0z1)` with the grading
/// variable absorbed into total degree.
pub fn chi_rescaled_display(order: usize) -> Result<Series2> {
    let u = RingElement::gen(Gen::U);
    let u_inv = RingElement::gen_pow(Gen::U, -1)?;
    let z0 = Series2::z0(order);
    let z1 = Series2::z1(order);
    let z0z1 = &z0 * &z1;
    let num = &(&z0 + &z1) + &z0z1.scale(&(&u + &u_inv));
    let den = &Series2::constant(order, RingElement::one()) - &z0z1;
    num.try_div(&den)
}

/// `−F(−z0, −z1)` for that law, whose logarithm is `Σ [n](t) zⁿ/n`.
pub fn chi_rescaled_closed_form(order: usize) -> Result<Series2> {
    let disp = chi_rescaled_display(order)?;
    Ok(Series2::from_fn(order, |i, j| {
        let c = disp.get(i, j);
        if (i + j) % 2 == 0 {
            -c
        } else {
            c.clone()
        }
    }))
}

/// `exp_∞(z) = z·exp(γz − Σ_{k≥2} ζ(k)(−z)^k/k)`, exponential of the Γ-law.
pub fn gamma_exponential(order: usize) -> Series1 {
    gamma_exponent(order.saturating_sub(1))
        .exp_series()
        .expect("zero constant term")
        .shift_up()
}

/// `γz − Σ_{k≥2} ζ(k)(−z)^k/k`.
pub fn gamma_exponent(order: usize) -> Series1 {
    Series1::from_fn(order, |k| match k {
        0 => RingElement::zero(),
        1 => RingElement::gen(Gen::Gamma),
        _ => {
            let sign = if k % 2 == 0 { -1 } else { 1 };
            RingElement::gen(Gen::Zeta(k as u32)).scale(&rat(sign, k as i64))
        }
    })
}

/// `ipi2·exp_∞(x/ipi2)`, reduced: every coefficient has weight 0.
pub fn gamma_exponential_normalized(order: usize) -> Result<Series1> {
    let raw = gamma_exponential(order);
    let mut out = Series1::zero(order);
    for k in 1..=order {
        let scale = RingElement::gen_pow(Gen::Ipi2, 1 - k as i32)?;
        out.set_coeff(k, (raw.coeff(k) * &scale).reduce());
    }
    Ok(out)
}

/// `Exp(z) = z(1 + e_1 z + e_2 z² + …)`.
pub fn universal_exponential(order: usize) -> Series1 {
    Series1::from_fn(order, |k| match k {
        0 => RingElement::zero(),
        1 => RingElement::one(),
        _ => RingElement::gen(Gen::E(k as u32 - 1)),
    })
}

impl Series1 {
    /// `z·f(z)` at order `order + 1`.
    fn shift_up(&self) -> Series1 {
        Series1::from_fn(self.order() + 1, |k| {
            if k == 0 {
                RingElement::zero()
            } else {
                self.coeff(k - 1).clone()
            }
        })
    }
}
