use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::ring::RingElement;
use crate::series::{MSeries, Series1};

/// A bivariate series `Σ c_{ij} z0^i z1^j` truncated at total degree `N`.
///
/// Storage is triangular and dense: total degree `d` occupies a block of
/// `d + 1` slots indexed by the `z0` exponent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Series2 {
    order: usize,
    coeffs: Vec<RingElement>,
}

fn idx(i: usize, j: usize) -> usize {
    let d = i + j;
    d * (d + 1) / 2 + i
}

impl Series2 {
    pub fn zero(order: usize) -> Self {
        Series2 {
            order,
            coeffs: vec![RingElement::zero(); idx(0, order + 1)],
        }
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> RingElement) -> Self {
        let mut s = Series2::zero(order);
        for d in 0..=order {
            for i in 0..=d {
                s.coeffs[idx(i, d - i)] = f(i, d - i);
            }
        }
        s
    }

    pub fn z0(order: usize) -> Self {
        let mut s = Series2::zero(order);
        if order >= 1 {
            s.set(1, 0, RingElement::one());
        }
        s
    }

    pub fn z1(order: usize) -> Self {
        let mut s = Series2::zero(order);
        if order >= 1 {
            s.set(0, 1, RingElement::one());
        }
        s
    }

    pub fn constant(order: usize, c: RingElement) -> Self {
        let mut s = Series2::zero(order);
        s.set(0, 0, c);
        s
    }

    /// `f(z0)` (for `var = 0`) or `f(z1)` (for `var = 1`).
    pub fn from_univariate(f: &Series1, var: usize) -> Self {
        let n = f.order();
        let mut s = Series2::zero(n);
        for (k, c) in f.coeffs().iter().enumerate() {
            if var == 0 {
                s.set(k, 0, c.clone());
            } else {
                s.set(0, k, c.clone());
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.coeffs[idx(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, c: RingElement) {
        self.coeffs[idx(i, j)] = c;
    }

    /// Nonzero coefficients in (total degree, z0 exponent) order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &RingElement)> {
        (0..=self.order)
            .flat_map(|d| (0..=d).rev().map(move |i| (i, d - i)))
            .map(|(i, j)| ((i, j), self.get(i, j)))
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order);
        Series2 {
            order,
            coeffs: self.coeffs[..idx(0, order + 1)].to_vec(),
        }
    }

    pub fn map_coeffs(&self, f: impl FnMut(&RingElement) -> RingElement) -> Self {
        Series2 {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map_coeffs(
        &self,
        f: impl FnMut(&RingElement) -> Result<RingElement>,
    ) -> Result<Self> {
        Ok(Series2 {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn scale(&self, c: &RingElement) -> Self {
        self.map_coeffs(|x| x * c)
    }

    /// `F(z0, z1) ↦ F(z1, z0)`.
    pub fn swap(&self) -> Self {
        Series2::from_fn(self.order, |i, j| self.get(j, i).clone())
    }

    /// `F(z, 0)`.
    pub fn restrict_z1_zero(&self) -> Series1 {
        Series1::from_fn(self.order, |i| self.get(i, 0).clone())
    }

    /// `F(0, z)`.
    pub fn restrict_z0_zero(&self) -> Series1 {
        Series1::from_fn(self.order, |j| self.get(0, j).clone())
    }

    /// `(∂F/∂z1)(z, 0)`, of order `N − 1`.
    pub fn d_z1_at_zero(&self) -> Series1 {
        Series1::from_fn(self.order.saturating_sub(1), |i| {
            if i + 1 > self.order {
                RingElement::zero()
            } else {
                self.get(i, 1).clone()
            }
        })
    }

    /// `F(z, z)`, useful for n-series.
    pub fn diagonal(&self) -> Series1 {
        let mut out = Series1::zero(self.order);
        for ((i, j), c) in self.iter() {
            let k = i + j;
            let v = out.coeff(k) + c;
            out.set_coeff(k, v);
        }
        out
    }

    /// `1/F`; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.get(0, 0).inverse_unit().ok_or(Error::DivByNonunit)?;
        // 1/F = inv0 · Σ_k (1 − inv0·F)^k, and 1 − inv0·F has zero constant term
        let unit = Series2::constant(self.order, RingElement::one());
        let w = &unit - &self.scale(&inv0);
        let mut acc = unit.clone();
        for _ in 0..self.order {
            acc = &unit + &(&acc * &w);
        }
        Ok(acc.scale(&inv0))
    }

    pub fn try_div(&self, other: &Series2) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(self * &other.inverse()?)
    }

    pub fn to_multi(&self) -> MSeries {
        let mut m = MSeries::zero(2, self.order);
        for ((i, j), c) in self.iter() {
            m.set(vec![i as u32, j as u32], c.clone());
        }
        m
    }

    pub fn from_multi(m: &MSeries) -> Self {
        assert_eq!(m.nvars(), 2);
        let mut s = Series2::zero(m.order());
        for (e, c) in m.iter() {
            s.set(e[0] as usize, e[1] as usize, c.clone());
        }
        s
    }

    /// `F(a, b)` for multivariate arguments without constant term.
    pub fn substitute(&self, a: &MSeries, b: &MSeries) -> Result<MSeries> {
        if !a.constant_term().is_zero() || !b.constant_term().is_zero() {
            return Err(Error::InnerConstantNonzero);
        }
        let n = self.order.min(a.order()).min(b.order());
        let nv = a.nvars();
        let mut bpow = vec![MSeries::one(nv, n)];
        for k in 1..=n {
            bpow.push(&bpow[k - 1] * b);
        }
        // Horner in a over P_i = Σ_j c_ij b^j
        let mut acc = MSeries::zero(nv, n);
        for i in (0..=n).rev() {
            acc = &acc * a;
            for j in 0..=(n - i) {
                let c = self.get(i, j);
                if !c.is_zero() {
                    acc.add_scaled(&bpow[j], c);
                }
            }
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for ((i, j), c) in self.iter() {
            map.insert(format!("{i},{j}"), c.to_json());
        }
        serde_json::json!({ "order": self.order, "coeffs": map })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |w: &str| Error::Parse(format!("bivariate series JSON: {w}"));
        let order = v
            .get("order")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("order"))? as usize;
        let map = v
            .get("coeffs")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("coeffs"))?;
        let mut s = Series2::zero(order);
        for (k, c) in map {
            let (i, j) = k.split_once(',').ok_or_else(|| bad("key"))?;
            let i: usize = i.trim().parse().map_err(|_| bad("key"))?;
            let j: usize = j.trim().parse().map_err(|_| bad("key"))?;
            if i + j > order {
                return Err(bad("key beyond order"));
            }
            s.set(i, j, RingElement::from_json(c)?);
        }
        Ok(s)
    }
}

impl Add for &Series2 {
    type Output = Series2;
    fn add(self, rhs: &Series2) -> Series2 {
        let n = self.order.min(rhs.order);
        Series2::from_fn(n, |i, j| self.get(i, j) + rhs.get(i, j))
    }
}

impl Sub for &Series2 {
    type Output = Series2;
    fn sub(self, rhs: &Series2) -> Series2 {
        let n = self.order.min(rhs.order);
        Series2::from_fn(n, |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

impl Neg for &Series2 {
    type Output = Series2;
    fn neg(self) -> Series2 {
        self.map_coeffs(|c| -c)
    }
}

impl Mul for &Series2 {
    type Output = Series2;
    fn mul(self, rhs: &Series2) -> Series2 {
        let n = self.order.min(rhs.order);
        let a: Vec<_> = self.iter().filter(|((i, j), _)| i + j <= n).collect();
        let b: Vec<_> = rhs.iter().filter(|((i, j), _)| i + j <= n).collect();
        let mut out = Series2::zero(n);
        for &((i1, j1), c1) in &a {
            for &((i2, j2), c2) in &b {
                if i1 + j1 + i2 + j2 <= n {
                    out.coeffs[idx(i1 + i2, j1 + j2)] += &(c1 * c2);
                }
            }
        }
        out
    }
}

impl Series1 {
    /// `f(S(z0, z1))` for a bivariate `S` without constant term.
    pub fn compose_bivariate(&self, inner: &Series2) -> Result<Series2> {
        if !inner.get(0, 0).is_zero() {
            return Err(Error::InnerConstantNonzero);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Series2::constant(n, self.coeff(n).clone());
        for k in (0..n).rev() {
            acc = &acc * &inner;
            let c = acc.get(0, 0) + self.coeff(k);
            acc.set(0, 0, c);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Gen;

    #[test]
    fn indexing_is_triangular() {
        let s = Series2::from_fn(4, |i, j| RingElement::int((10 * i + j) as i64));
        for i in 0..=4 {
            for j in 0..=(4 - i) {
                assert_eq!(s.get(i, j), &RingElement::int((10 * i + j) as i64));
            }
        }
        assert_eq!(s.swap().get(3, 1), &RingElement::int(13));
    }

    #[test]
    fn inverse_of_one_minus_t_z0_z1() {
        let n = 6;
        let t = RingElement::gen(Gen::T);
        let one = Series2::constant(n, RingElement::one());
        let d = &one - &(&Series2::z0(n) * &Series2::z1(n)).scale(&t);
        let inv = d.inverse().unwrap();
        assert_eq!(&inv * &d, one);
        assert_eq!(inv.get(2, 2), &(&t * &t));
        assert_eq!(inv.get(1, 2), &RingElement::zero());
    }

    #[test]
    fn compose_with_sum_of_vars() {
        let n = 5;
        let sq = Series1::from_fn(n, |k| RingElement::int((k == 2) as i64));
        let s = &Series2::z0(n) + &Series2::z1(n);
        let out = sq.compose_bivariate(&s).unwrap();
        assert_eq!(out.get(1, 1), &RingElement::int(2));
        assert_eq!(out.get(2, 0), &RingElement::int(1));
        assert_eq!(out.iter().count(), 3);
    }

    #[test]
    fn json_omits_zeros() {
        let n = 3;
        let f = &(&Series2::z0(n) + &Series2::z1(n)) + &(&Series2::z0(n) * &Series2::z1(n));
        let v = f.to_json();
        let keys: Vec<_> = v["coeffs"].as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, vec!["0,1", "1,0", "1,1"]);
        assert_eq!(Series2::from_json(&v).unwrap(), f);
    }
}
