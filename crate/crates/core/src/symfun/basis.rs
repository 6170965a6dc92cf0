use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::ring::{parse_rational, rat, rational_string, Gen, Monomial, RingElement};
use crate::series::Series1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Elementary `e_n`.
    E,
    /// Complete homogeneous `h_n`.
    H,
    /// Power sums `s_n`.
    P,
}

impl Basis {
    pub fn gen(self, n: u32) -> Gen {
        match self {
            Basis::E => Gen::E(n),
            Basis::H => Gen::H(n),
            Basis::P => Gen::S(n),
        }
    }

    /// The index `n` if `g` is a generator of this basis.
    pub fn index_of(self, g: Gen) -> Option<u32> {
        match (self, g) {
            (Basis::E, Gen::E(n)) | (Basis::H, Gen::H(n)) | (Basis::P, Gen::S(n)) => Some(n),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::E => "E",
            Basis::H => "H",
            Basis::P => "P",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "E" | "e" => Ok(Basis::E),
            "H" | "h" => Ok(Basis::H),
            "P" | "p" | "s" => Ok(Basis::P),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// Weighted degree of `x` in the generators of `basis` (`e_n`, `h_n`, `s_n`
/// all of weight `n`); other generators count zero.
pub fn basis_degree(x: &RingElement, basis: Basis) -> usize {
    x.terms()
        .map(|(m, _)| {
            m.factors()
                .iter()
                .filter_map(|&(g, e)| basis.index_of(g).map(|n| n as usize * e as usize))
                .sum::<usize>()
        })
        .max()
        .unwrap_or(0)
}

/// `images[n]` is the `from`-generator of index `n` written in the `to` basis,
/// for `1 ≤ n ≤ degree`.
pub fn basis_images(from: Basis, to: Basis, degree: usize) -> Vec<RingElement> {
    let gen_series = |b: Basis, sign: bool| {
        // Σ b_k z^k with b_0 = 1, optionally at −z
        Series1::from_fn(degree, |k| match k {
            0 => RingElement::one(),
            _ if sign && k % 2 == 1 => -RingElement::gen(b.gen(k as u32)),
            _ => RingElement::gen(b.gen(k as u32)),
        })
    };
    let power_sum_exponent = |alternating: bool| {
        Series1::from_fn(degree, |k| match k {
            0 => RingElement::zero(),
            _ => {
                let sign = if alternating && k % 2 == 0 { -1 } else { 1 };
                RingElement::gen(Gen::S(k as u32)).scale(&rat(sign, k as i64))
            }
        })
    };
    let series: Series1 = match (from, to) {
        _ if from == to => return (0..=degree).map(|n| identity_image(from, n)).collect(),
        // e(z) = exp(−Σ s_n (−z)^n / n)
        (Basis::E, Basis::P) => power_sum_exponent(true)
            .exp_series()
            .expect("zero constant"),
        // h(z) = exp(Σ s_n z^n / n)
        (Basis::H, Basis::P) => power_sum_exponent(false)
            .exp_series()
            .expect("zero constant"),
        // e(z) = 1/h(−z)
        (Basis::E, Basis::H) => gen_series(Basis::H, true).inverse().expect("unit constant"),
        // h(z) = 1/e(−z)
        (Basis::H, Basis::E) => gen_series(Basis::E, true).inverse().expect("unit constant"),
        (Basis::P, source) => {
            let log = gen_series(source, false).log_series().expect("constant 1");
            return (0..=degree)
                .map(|n| {
                    if n == 0 {
                        return RingElement::one();
                    }
                    let sign = if source == Basis::E && n % 2 == 0 {
                        -1
                    } else {
                        1
                    };
                    log.coeff(n).scale(&rat(sign * n as i64, 1))
                })
                .collect();
        }
        _ => unreachable!(),
    };
    series.coeffs().to_vec()
}

fn identity_image(b: Basis, n: usize) -> RingElement {
    if n == 0 {
        RingElement::one()
    } else {
        RingElement::gen(b.gen(n as u32))
    }
}

/// Rewrites every `from`-generator in `x` in the `to` basis, leaving all other
/// generators untouched.
pub fn convert_element(x: &RingElement, from: Basis, to: Basis) -> RingElement {
    if from == to {
        return x.clone();
    }
    let degree = basis_degree(x, from);
    let images = basis_images(from, to, degree);
    x.substitute(|g| from.index_of(g).map(|n| images[n as usize].clone()))
        .expect("basis generators occur with nonnegative exponents")
}

/// A symmetric function with rational coefficients in one of three bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    basis: Basis,
    poly: RingElement,
}

impl SymPoly {
    /// Accepts `poly` only if it is a rational polynomial in the basis generators.
    pub fn new(basis: Basis, poly: RingElement) -> Result<Self> {
        if poly.contains(|g| basis.index_of(g).is_none()) {
            return Err(Error::InvalidArgument(format!(
                "{poly} is not a polynomial in the {basis} basis"
            )));
        }
        Ok(SymPoly { basis, poly })
    }

    pub fn gen(basis: Basis, n: u32) -> Self {
        SymPoly {
            basis,
            poly: RingElement::gen(basis.gen(n)),
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn poly(&self) -> &RingElement {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        basis_degree(&self.poly, self.basis)
    }

    pub fn convert(&self, target: Basis) -> SymPoly {
        SymPoly {
            basis: target,
            poly: convert_element(&self.poly, self.basis, target),
        }
    }

    pub fn mul(&self, other: &SymPoly) -> SymPoly {
        let other = other.convert(self.basis);
        SymPoly {
            basis: self.basis,
            poly: &self.poly * &other.poly,
        }
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .poly
            .terms()
            .map(|(m, c)| {
                let exps: Map<String, Value> = m
                    .factors()
                    .iter()
                    .map(|&(g, e)| (self.basis.index_of(g).unwrap().to_string(), json!(e)))
                    .collect();
                json!({"coeff": rational_string(c), "exps": exps})
            })
            .collect();
        json!({"basis": self.basis.to_string(), "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |w: &str| Error::Parse(format!("symmetric function JSON: {w}"));
        let basis: Basis = v
            .get("basis")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("basis"))?
            .parse()?;
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("terms"))?;
        let mut out: Vec<(Monomial, BigRational)> = Vec::new();
        for t in terms {
            let c = parse_rational(
                t.get("coeff")
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad("coeff"))?,
            )?;
            let exps = t
                .get("exps")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("exps"))?;
            let mut factors = Vec::new();
            for (k, e) in exps {
                let n: u32 = k.parse().map_err(|_| bad("index"))?;
                let e = e.as_i64().ok_or_else(|| bad("exponent"))?;
                if n == 0 || e < 0 {
                    return Err(bad("index or exponent"));
                }
                factors.push((basis.gen(n), e as i32));
            }
            out.push((Monomial::new(factors)?, c));
        }
        SymPoly::new(basis, RingElement::from_terms(out))
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}
