//! Floating-point evaluation of ring elements.
//!
//! Zeta values come from the Borwein eta-series acceleration, computed in
//! exact rational arithmetic and rounded once at the end.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ring::{Gen, RingElement};

pub const MAX_PRECISION: u32 = 30;

const EULER_GAMMA: &str = "0.57721566490153286060651209008240243104215933593992";
const PI: &str = "3.14159265358979323846264338327950288419716939937510";

fn decimal(s: &str) -> BigRational {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits = BigInt::from_str(&format!("{int}{frac}")).expect("decimal literal");
    BigRational::new(digits, num_traits::pow(BigInt::from(10), frac.len()))
}

pub fn euler_gamma() -> f64 {
    decimal(EULER_GAMMA).to_f64().expect("finite")
}

pub fn pi() -> f64 {
    decimal(PI).to_f64().expect("finite")
}

/// Rational approximation of `ζ(k)` with absolute error below `10^{-precision}`
/// (precision capped at [`MAX_PRECISION`]).
pub fn zeta_rational(k: u32, precision: u32) -> Result<BigRational> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "zeta_numeric needs k >= 2, got {k}"
        )));
    }
    let precision = precision.min(MAX_PRECISION);
    // error of the n-term eta sum is at most 3/(3+√8)^n; 1/(1-2^{1-k}) <= 2
    let n = (precision as f64 / 0.765).ceil() as usize + 3;

    // d_j = n Σ_{i≤j} (n+i-1)! 4^i / ((n-i)! (2i)!)
    let mut d = Vec::with_capacity(n + 1);
    // the i = 0 summand is (n-1)!/n!, so n times it is 1
    let mut term = BigRational::one();
    let mut acc = BigRational::zero();
    for i in 0..=n {
        if i > 0 {
            // ratio term_i / term_{i-1} = (n+i-1)(n-i+1)·4 / ((2i)(2i-1))
            let num = BigInt::from(n + i - 1) * BigInt::from(n - i + 1) * 4;
            let den = BigInt::from(2 * i) * BigInt::from(2 * i - 1);
            term = term * BigRational::new(num, den);
        }
        acc += &term;
        d.push(acc.clone());
    }
    let dn = d[n].clone();
    let mut eta = BigRational::zero();
    for (j, dj) in d.iter().take(n).enumerate() {
        let denom = num_traits::pow(BigInt::from(j + 1), k as usize);
        let v = (dj - &dn) / BigRational::from_integer(denom);
        if j % 2 == 0 {
            eta += v;
        } else {
            eta -= v;
        }
    }
    eta = -eta / &dn;
    let two_pow = BigRational::new(
        BigInt::one(),
        num_traits::pow(BigInt::from(2), (k - 1) as usize),
    );
    Ok(eta / (BigRational::one() - two_pow))
}

pub fn zeta_numeric(k: u32, precision: u32) -> Result<f64> {
    Ok(zeta_rational(k, precision)?.to_f64().expect("finite"))
}

/// Numeric value of `elem`, with defaults for `γ`, `ζ(k)` and `ipi2 = 2πi`.
/// Every other generator needs an entry in `overrides`.
pub fn evaluate_numeric(
    elem: &RingElement,
    overrides: &BTreeMap<Gen, Complex64>,
    precision: u32,
) -> Result<Complex64> {
    let mut values: BTreeMap<Gen, Complex64> = BTreeMap::new();
    let mut total = Complex64::zero();
    for (m, c) in elem.terms() {
        let mut v = Complex64::new(c.to_f64().expect("finite"), 0.0);
        for &(g, e) in m.factors() {
            let x = match values.get(&g) {
                Some(x) => *x,
                None => {
                    let x = match overrides.get(&g) {
                        Some(x) => *x,
                        None => default_value(g, precision)?,
                    };
                    values.insert(g, x);
                    x
                }
            };
            v *= x.powi(e);
        }
        total += v;
    }
    Ok(total)
}

fn default_value(g: Gen, precision: u32) -> Result<Complex64> {
    match g {
        Gen::Gamma => Ok(Complex64::new(euler_gamma(), 0.0)),
        Gen::Zeta(k) => Ok(Complex64::new(zeta_numeric(k, precision)?, 0.0)),
        Gen::Ipi2 => Ok(Complex64::new(0.0, 2.0 * pi())),
        other => Err(Error::UnboundGenerator(other.to_string())),
    }
}
