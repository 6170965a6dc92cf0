use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ring::RingElement;
use crate::series::Series1;

/// A sparse series in `nvars` variables truncated at total degree `order`.
///
/// Used for trivariate associativity checks and for polynomials in finite
/// root alphabets `x_1, …, x_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MSeries {
    nvars: usize,
    order: usize,
    terms: BTreeMap<Vec<u32>, RingElement>,
}

fn degree(e: &[u32]) -> usize {
    e.iter().map(|&x| x as usize).sum()
}

impl MSeries {
    pub fn zero(nvars: usize, order: usize) -> Self {
        MSeries {
            nvars,
            order,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, order: usize, c: RingElement) -> Self {
        let mut s = MSeries::zero(nvars, order);
        s.set(vec![0; nvars], c);
        s
    }

    pub fn one(nvars: usize, order: usize) -> Self {
        MSeries::constant(nvars, order, RingElement::one())
    }

    pub fn var(nvars: usize, order: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut s = MSeries::zero(nvars, order);
        s.set(e, RingElement::one());
        s
    }

    /// `f(x_i)` for a univariate series `f`.
    pub fn from_univariate(nvars: usize, order: usize, i: usize, f: &Series1) -> Self {
        let mut s = MSeries::zero(nvars, order);
        for (k, c) in f.coeffs().iter().enumerate().take(order + 1) {
            let mut e = vec![0; nvars];
            e[i] = k as u32;
            s.set(e, c.clone());
        }
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Sets a coefficient; exponents beyond the order are dropped.
    pub fn set(&mut self, e: Vec<u32>, c: RingElement) {
        assert_eq!(e.len(), self.nvars);
        if degree(&e) > self.order || c.is_zero() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, c);
        }
    }

    pub fn get(&self, e: &[u32]) -> RingElement {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &RingElement)> {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> RingElement {
        self.get(&vec![0; self.nvars])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, other: &MSeries, c: &RingElement) {
        for (e, v) in &other.terms {
            if degree(e) > self.order {
                continue;
            }
            let mut cur = self.terms.remove(e).unwrap_or_default();
            cur += &(v * c);
            if !cur.is_zero() {
                self.terms.insert(e.clone(), cur);
            }
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&RingElement) -> RingElement) -> Self {
        let mut out = MSeries::zero(self.nvars, self.order);
        for (e, c) in &self.terms {
            out.set(e.clone(), f(c));
        }
        out
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&RingElement) -> Result<RingElement>) -> Result<Self> {
        let mut out = MSeries::zero(self.nvars, self.order);
        for (e, c) in &self.terms {
            out.set(e.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Homogeneous component of total degree `d`.
    pub fn component(&self, d: usize) -> Vec<(&Vec<u32>, &RingElement)> {
        self.terms.iter().filter(|(e, _)| degree(e) == d).collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut out = MSeries::zero(self.nvars, order.min(self.order));
        for (e, c) in &self.terms {
            out.set(e.clone(), c.clone());
        }
        out
    }

    /// `f(self)` for a univariate `f`, requiring zero constant term.
    pub fn compose_into(&self, f: &Series1) -> Result<MSeries> {
        if !self.constant_term().is_zero() {
            return Err(Error::InnerConstantNonzero);
        }
        let n = self.order.min(f.order());
        let mut acc = MSeries::constant(self.nvars, n, f.coeff(n).clone());
        for k in (0..n).rev() {
            acc = &acc * self;
            acc.add_scaled(&MSeries::one(self.nvars, n), f.coeff(k));
        }
        Ok(acc)
    }

    /// `exp(self)`, requiring zero constant term.
    pub fn exp(&self) -> Result<MSeries> {
        let exp = Series1::from_rationals(self.order, |k| {
            BigRational::new(1.into(), crate::ring::factorial(k))
        });
        self.compose_into(&exp)
    }

    /// First total degree (ascending) where `self` and `other` differ, with
    /// one differing coefficient.
    pub fn first_difference(&self, other: &MSeries) -> Option<(usize, Vec<u32>, RingElement)> {
        let diff = self - other;
        diff.terms
            .iter()
            .min_by(|a, b| degree(a.0).cmp(&degree(b.0)).then(a.0.cmp(b.0)))
            .map(|(e, c)| (degree(e), e.clone(), c.clone()))
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.map_coeffs(|x| x.scale(c))
    }

    pub fn int_scale(&self, n: i64) -> Self {
        self.scale_rational(&BigRational::from_integer(BigInt::from(n)))
    }
}

impl Add for &MSeries {
    type Output = MSeries;
    fn add(self, rhs: &MSeries) -> MSeries {
        let mut out = self.truncate(self.order.min(rhs.order));
        out.add_scaled(rhs, &RingElement::one());
        out
    }
}

impl Sub for &MSeries {
    type Output = MSeries;
    fn sub(self, rhs: &MSeries) -> MSeries {
        let mut out = self.truncate(self.order.min(rhs.order));
        out.add_scaled(rhs, &RingElement::int(-1));
        out
    }
}

impl Neg for &MSeries {
    type Output = MSeries;
    fn neg(self) -> MSeries {
        self.map_coeffs(|c| -c)
    }
}

impl Mul for &MSeries {
    type Output = MSeries;
    fn mul(self, rhs: &MSeries) -> MSeries {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let n = self.order.min(rhs.order);
        let a: Vec<_> = self.terms.iter().map(|(e, c)| (degree(e), e, c)).collect();
        let b: Vec<_> = rhs.terms.iter().map(|(e, c)| (degree(e), e, c)).collect();
        let mut acc: BTreeMap<Vec<u32>, RingElement> = BTreeMap::new();
        for &(da, ea, ca) in &a {
            if da > n {
                continue;
            }
            for &(db, eb, cb) in &b {
                if da + db > n {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_default() += &(ca * cb);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MSeries {
            nvars: self.nvars,
            order: n,
            terms: acc,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_truncates_by_total_degree() {
        let x = MSeries::var(2, 3, 0);
        let y = MSeries::var(2, 3, 1);
        let s = &x + &y;
        let cube = &(&s * &s) * &s;
        assert_eq!(cube.get(&[2, 1]), RingElement::int(3));
        let four = &cube * &s;
        assert!(four.is_zero());
    }

    #[test]
    fn exp_of_a_sum_factors() {
        let n = 6;
        let x = MSeries::var(2, n, 0);
        let y = MSeries::var(2, n, 1);
        let lhs = (&x + &y).exp().unwrap();
        let rhs = &x.exp().unwrap() * &y.exp().unwrap();
        assert_eq!(lhs, rhs);
    }
}
