use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ring::RingElement;

/// A power series `c_0 + c_1 z + … + c_N z^N` truncated at order `N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series1 {
    coeffs: Vec<RingElement>,
}

fn int(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Series1 {
    pub fn zero(order: usize) -> Self {
        Series1 {
            coeffs: vec![RingElement::zero(); order + 1],
        }
    }

    pub fn constant(order: usize, c: RingElement) -> Self {
        let mut s = Series1::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Series1::constant(order, RingElement::one())
    }

    /// The series variable `z`.
    pub fn var(order: usize) -> Self {
        let mut s = Series1::zero(order);
        if order >= 1 {
            s.coeffs[1] = RingElement::one();
        }
        s
    }

    /// Takes `coeffs` as `c_0..c_N`; the order is `coeffs.len() − 1`.
    pub fn from_coeffs(coeffs: Vec<RingElement>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least a constant term"
        );
        Series1 { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> RingElement) -> Self {
        Series1 {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Rational-coefficient series from a closure returning `c_n`.
    pub fn from_rationals(order: usize, mut f: impl FnMut(usize) -> BigRational) -> Self {
        Series1::from_fn(order, |n| RingElement::constant(f(n)))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &RingElement {
        &self.coeffs[n]
    }

    /// `c_n`, or zero beyond the truncation order.
    pub fn coeff_or_zero(&self, n: usize) -> RingElement {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: RingElement) {
        self.coeffs[n] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncate cannot raise the order");
        Series1 {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Truncates or pads with zeros.
    pub fn resize(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, RingElement::zero());
        Series1 { coeffs }
    }

    pub fn map_coeffs(&self, f: impl FnMut(&RingElement) -> RingElement) -> Self {
        Series1 {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map_coeffs(
        &self,
        f: impl FnMut(&RingElement) -> Result<RingElement>,
    ) -> Result<Self> {
        Ok(Series1 {
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RingElement::is_zero)
    }

    fn check_orders(&self, other: &Series1) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Series1) -> Result<Self> {
        self.check_orders(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Series1) -> Result<Self> {
        self.check_orders(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &RingElement) -> Self {
        self.map_coeffs(|x| x * c)
    }

    /// `f(c·z)`.
    pub fn scale_var(&self, c: &RingElement) -> Self {
        let mut p = RingElement::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            out.push(x * &p);
            p = &p * c;
        }
        Series1 { coeffs: out }
    }

    /// `1/f`; the constant term must be a unit of the coefficient ring.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse_unit().ok_or(Error::DivByNonunit)?;
        let n = self.order();
        let mut g = vec![RingElement::zero(); n + 1];
        g[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = RingElement::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !g[k - j].is_zero() {
                    acc += &(&self.coeffs[j] * &g[k - j]);
                }
            }
            g[k] = -&(&acc * &inv0);
        }
        Ok(Series1 { coeffs: g })
    }

    pub fn try_div(&self, other: &Series1) -> Result<Self> {
        self.check_orders(other)?;
        Ok(self * &other.inverse()?)
    }

    /// `self ∘ inner`, requiring `inner(0) = 0`.
    pub fn compose(&self, inner: &Series1) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InnerConstantNonzero);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Series1::constant(n, self.coeffs[n].clone());
        for k in (0..n).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Series1::zero(0);
        }
        Series1::from_fn(self.order() - 1, |k| self.coeffs[k + 1].scale(&int(k + 1)))
    }

    /// `∫_0^z f`, one order higher.
    pub fn integral(&self) -> Self {
        Series1::from_fn(self.order() + 1, |k| {
            if k == 0 {
                RingElement::zero()
            } else {
                self.coeffs[k - 1].scale(&int(k).recip())
            }
        })
    }

    /// Compositional inverse by order-doubling Newton iteration
    /// `g ← g − (f∘g − z)/(f'∘g)`.
    pub fn revert(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 || !self.coeffs[0].is_zero() {
            return Err(Error::NotRevertible);
        }
        let inv1 = self.coeffs[1].inverse_unit().ok_or(Error::NotRevertible)?;
        let mut g = Series1::var(1).scale(&inv1);
        let mut p = 1;
        while p < n {
            p = (2 * p).min(n);
            let f = self.truncate(p);
            let gp = g.resize(p);
            let fg = f.compose(&gp)?;
            let residual = &fg - &Series1::var(p);
            let df = f.derivative().resize(p).compose(&gp)?;
            g = &gp - &(&residual * &df.inverse()?);
        }
        Ok(g.resize(n))
    }

    /// `exp(f)` for `f(0) = 0`.
    pub fn exp_series(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm("exp (needs f(0) = 0)"));
        }
        let n = self.order();
        let mut g = vec![RingElement::zero(); n + 1];
        g[0] = RingElement::one();
        for m in 1..=n {
            let mut acc = RingElement::zero();
            for k in 1..=m {
                if !self.coeffs[k].is_zero() && !g[m - k].is_zero() {
                    acc += &(&self.coeffs[k] * &g[m - k]).scale(&int(k));
                }
            }
            g[m] = acc.scale(&int(m).recip());
        }
        Ok(Series1 { coeffs: g })
    }

    /// `log(f)` for `f(0) = 1`.
    pub fn log_series(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm("log (needs f(0) = 1)"));
        }
        let n = self.order();
        let mut g = vec![RingElement::zero(); n + 1];
        for m in 1..=n {
            let mut acc = self.coeffs[m].scale(&int(m));
            for k in 1..m {
                if !g[k].is_zero() && !self.coeffs[m - k].is_zero() {
                    acc -= &(&g[k] * &self.coeffs[m - k]).scale(&int(k));
                }
            }
            g[m] = acc.scale(&int(m).recip());
        }
        Ok(Series1 { coeffs: g })
    }

    /// `√f` for `f(0) = 1`, the branch with constant term 1.
    pub fn sqrt_series(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm("sqrt (needs f(0) = 1)"));
        }
        let n = self.order();
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut g = vec![RingElement::zero(); n + 1];
        g[0] = RingElement::one();
        for m in 1..=n {
            let mut acc = self.coeffs[m].clone();
            for k in 1..m {
                if !g[k].is_zero() && !g[m - k].is_zero() {
                    acc -= &(&g[k] * &g[m - k]);
                }
            }
            g[m] = acc.scale(&half);
        }
        Ok(Series1 { coeffs: g })
    }

    /// `f^k` for a nonnegative integer power.
    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Series1::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `e^{cz} − 1`, `2 sinh(z/2)` and friends are built from this.
    pub fn exp_linear(order: usize, c: &RingElement) -> Self {
        let mut out = Vec::with_capacity(order + 1);
        let mut term = RingElement::one();
        for k in 0..=order {
            if k > 0 {
                term = (&term * c).scale(&int(k).recip());
            }
            out.push(term.clone());
        }
        Series1 { coeffs: out }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": self.order(),
            "coeffs": self.coeffs.iter().map(RingElement::to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |w: &str| Error::Parse(format!("series JSON: {w}"));
        let order = v
            .get("order")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("order"))? as usize;
        let arr = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("coeffs"))?;
        if arr.len() > order + 1 {
            return Err(bad("more coefficients than order + 1"));
        }
        let mut coeffs = arr
            .iter()
            .map(RingElement::from_json)
            .collect::<Result<Vec<_>>>()?;
        coeffs.resize(order + 1, RingElement::zero());
        Ok(Series1 { coeffs })
    }
}

impl Add for &Series1 {
    type Output = Series1;
    fn add(self, rhs: &Series1) -> Series1 {
        let n = self.order().min(rhs.order());
        Series1::from_fn(n, |k| &self.coeffs[k] + &rhs.coeffs[k])
    }
}

impl Sub for &Series1 {
    type Output = Series1;
    fn sub(self, rhs: &Series1) -> Series1 {
        let n = self.order().min(rhs.order());
        Series1::from_fn(n, |k| &self.coeffs[k] - &rhs.coeffs[k])
    }
}

impl Neg for &Series1 {
    type Output = Series1;
    fn neg(self) -> Series1 {
        self.map_coeffs(|c| -c)
    }
}

/// Truncated product; mismatched orders truncate to the smaller one.
impl Mul for &Series1 {
    type Output = Series1;
    fn mul(self, rhs: &Series1) -> Series1 {
        let n = self.order().min(rhs.order());
        let mut out = vec![RingElement::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Series1 { coeffs: out }
    }
}

impl fmt::Display for Series1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Gen};

    fn r(n: i64, d: i64) -> RingElement {
        RingElement::ratio(n, d)
    }

    fn poly(order: usize, cs: &[i64]) -> Series1 {
        Series1::from_fn(order, |k| RingElement::int(cs.get(k).copied().unwrap_or(0)))
    }

    #[test]
    fn arithmetic_examples() {
        let n = 6;
        let a = poly(n, &[1, 1]);
        let b = poly(n, &[1, -1]);
        assert_eq!(&a * &b, poly(n, &[1, 0, -1]));

        let geo = Series1::one(n).try_div(&b).unwrap();
        assert_eq!(geo, poly(n, &[1; 7]));

        let g = RingElement::gen(Gen::Gamma);
        let x = Series1::from_coeffs(vec![r(0, 1), r(1, 1), g.clone(), r(0, 1), r(0, 1)]);
        let expect = Series1::from_coeffs(vec![r(0, 1), r(0, 1), r(1, 1), g, r(0, 1)]);
        assert_eq!(&x * &Series1::var(4), expect);
    }

    #[test]
    fn division_needs_a_unit() {
        let n = 4;
        let nonunit = Series1::constant(n, RingElement::gen(Gen::Gamma));
        assert_eq!(Series1::one(n).try_div(&nonunit), Err(Error::DivByNonunit));
        let t = Series1::constant(n, RingElement::gen(Gen::T));
        let q = Series1::one(n).try_div(&t).unwrap();
        assert_eq!(q.coeff(0), &RingElement::gen_pow(Gen::T, -1).unwrap());
    }

    #[test]
    fn composition_examples() {
        let n = 5;
        let sq = poly(n, &[0, 0, 1]);
        let inner = poly(n, &[0, 1, 1]);
        assert_eq!(sq.compose(&inner).unwrap(), poly(n, &[0, 0, 1, 2, 1]));
        assert_eq!(inner.compose(&Series1::var(n)).unwrap(), inner);
        assert_eq!(
            sq.compose(&poly(n, &[1, 1])),
            Err(Error::InnerConstantNonzero)
        );

        let n = 8;
        let expm1 = &Series1::exp_linear(n, &RingElement::one()) - &Series1::one(n);
        let log1p = Series1::from_rationals(n, |k| {
            if k == 0 {
                rat(0, 1)
            } else {
                rat(if k % 2 == 1 { 1 } else { -1 }, k as i64)
            }
        });
        assert_eq!(expm1.compose(&log1p).unwrap(), Series1::var(n));
    }

    #[test]
    fn reversion_examples() {
        let n = 8;
        assert_eq!(Series1::var(n).revert().unwrap(), Series1::var(n));
        // Catalan numbers
        let f = poly(n, &[0, 1, -1]);
        assert_eq!(
            f.revert().unwrap(),
            poly(n, &[0, 1, 1, 2, 5, 14, 42, 132, 429])
        );
        assert_eq!(poly(n, &[1, 1]).revert(), Err(Error::NotRevertible));
        assert_eq!(poly(n, &[0, 0, 1]).revert(), Err(Error::NotRevertible));
        assert_eq!(
            Series1::var(n)
                .scale(&RingElement::gen(Gen::Gamma))
                .revert(),
            Err(Error::NotRevertible)
        );
        // symbolic linear coefficient that is a unit
        let t = RingElement::gen(Gen::T);
        let h = &Series1::var(n).scale(&t) + &poly(n, &[0, 0, 1]);
        let g = h.revert().unwrap();
        assert_eq!(h.compose(&g).unwrap(), Series1::var(n));
        assert_eq!(g.compose(&h).unwrap(), Series1::var(n));
    }

    #[test]
    fn analytic_primitives() {
        let n = 7;
        let e = Series1::var(n).exp_series().unwrap();
        assert_eq!(e, Series1::exp_linear(n, &RingElement::one()));
        let lg = poly(n, &[1, 1]).log_series().unwrap();
        for k in 1..=n {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            assert_eq!(lg.coeff(k), &r(sign, k as i64));
        }
        let quarter = Series1::from_coeffs(vec![r(1, 1), r(0, 1), r(1, 4), r(0, 1), r(0, 1)]);
        let s = quarter.sqrt_series().unwrap();
        assert_eq!(
            s.coeffs(),
            &[r(1, 1), r(0, 1), r(1, 8), r(0, 1), r(-1, 128)]
        );
        assert_eq!(&s * &s, quarter);
        assert!(poly(n, &[2, 1]).log_series().is_err());
        assert!(poly(n, &[1, 1]).exp_series().is_err());
        assert!(poly(n, &[0, 1]).sqrt_series().is_err());
    }

    #[test]
    fn json_round_trip() {
        let s = Series1::from_coeffs(vec![r(0, 1), r(1, 1), RingElement::gen(Gen::Gamma)]);
        let v = s.to_json();
        assert_eq!(v["order"], 2);
        assert_eq!(Series1::from_json(&v).unwrap(), s);
    }
}
