use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::bernoulli::zeta_tilde_even;
use crate::ring::{Gen, Monomial};

/// An exact sparse Laurent polynomial over `Q` in the generator registry.
///
/// Terms are kept canonical: no zero coefficients, monomials in graded-lex
/// order. Structural equality is ring equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RingElement {
    terms: BTreeMap<Monomial, BigRational>,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn one() -> Self {
        RingElement::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RingElement::term(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Self {
        RingElement::constant(BigRational::from_integer(n.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        RingElement::constant(rat(n, d))
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        RingElement { terms }
    }

    pub fn gen(g: Gen) -> Self {
        RingElement::term(
            Monomial::gen(g, 1).expect("positive exponent"),
            BigRational::one(),
        )
    }

    /// `g^e`; negative exponents only for Laurent generators.
    pub fn gen_pow(g: Gen, e: i32) -> Result<Self> {
        Ok(RingElement::term(Monomial::gen(g, e)?, BigRational::one()))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut out = RingElement::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|c| c.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The rational value if the element has no generator content.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn contains(&self, pred: impl Fn(Gen) -> bool) -> bool {
        self.terms
            .keys()
            .any(|m| m.factors().iter().any(|&(g, _)| pred(g)))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return RingElement::zero();
        }
        RingElement {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        RingElement {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = RingElement::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse when the element is a single term supported on Laurent generators.
    pub fn inverse_unit(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if !m.factors().iter().all(|&(g, _)| g.allows_negative()) {
            return None;
        }
        let inv = Monomial::new(m.factors().iter().map(|&(g, e)| (g, -e))).ok()?;
        Some(RingElement::term(inv, c.recip()))
    }

    /// Common total weight of all monomials, or `None` when not homogeneous.
    /// The zero element is treated as homogeneous of weight 0.
    pub fn weight(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(Monomial::weight);
        let Some(w) = it.next() else { return Some(0) };
        it.all(|x| x == w).then_some(w)
    }

    /// Rewrites every `ζ(2k)` as `ζ̃(2k)·ipi2^{2k}` with `ζ̃(2k) = −B_{2k}/(2(2k)!)`.
    pub fn reduce(&self) -> Self {
        let mut out = RingElement::zero();
        for (m, c) in &self.terms {
            let mut c = c.clone();
            let mut kept = Vec::with_capacity(m.factors().len());
            let mut ipi2 = 0i32;
            for &(g, e) in m.factors() {
                match g {
                    Gen::Zeta(k) if k % 2 == 0 => {
                        let zt = zeta_tilde_even(k / 2).expect("k >= 1");
                        c *= num_traits::pow(zt, e as usize);
                        ipi2 += e * k as i32;
                    }
                    Gen::Ipi2 => ipi2 += e,
                    _ => kept.push((g, e)),
                }
            }
            if ipi2 != 0 {
                kept.push((Gen::Ipi2, ipi2));
            }
            out.add_term(Monomial::new(kept).expect("valid"), c);
        }
        out
    }

    /// The ring involution `ipi2 ↦ −ipi2`.
    pub fn conjugate(&self) -> Self {
        RingElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let v = if m.exponent(Gen::Ipi2) % 2 != 0 {
                        -c
                    } else {
                        c.clone()
                    };
                    (m.clone(), v)
                })
                .collect(),
        }
    }

    /// Ring homomorphism sending each generator `g` with `image(g) = Some(x)`
    /// to `x`. Substituted generators must occur with nonnegative exponent
    /// unless their image is a unit.
    pub fn substitute(&self, image: impl Fn(Gen) -> Option<RingElement>) -> Result<Self> {
        let mut cache: BTreeMap<(Gen, i32), RingElement> = BTreeMap::new();
        let mut out = RingElement::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = RingElement::constant(c.clone());
            for &(g, e) in m.factors() {
                match image(g) {
                    None => kept.push((g, e)),
                    Some(x) => {
                        let key = (g, e);
                        if !cache.contains_key(&key) {
                            let p = if e >= 0 {
                                x.pow(e as u32)
                            } else {
                                x.inverse_unit()
                                    .ok_or_else(|| {
                                        Error::InvalidArgument(format!(
                                            "cannot substitute a non-unit for {g}^{e}"
                                        ))
                                    })?
                                    .pow((-e) as u32)
                            };
                            cache.insert(key, p);
                        }
                        acc = &acc * &cache[&key];
                    }
                }
            }
            let rest = Monomial::new(kept).expect("subset of a valid monomial");
            out += &acc.mul_monomial(&rest);
        }
        Ok(out)
    }

    pub fn substitute_gen(&self, g: Gen, value: &RingElement) -> Result<Self> {
        self.substitute(|h| (h == g).then(|| value.clone()))
    }

    /// Drops every monomial in which `g` has exponent above `max`.
    pub fn truncate_gen(&self, g: Gen, max: i32) -> Self {
        RingElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(g) <= max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Keeps only the monomials satisfying `pred`.
    pub fn filter(&self, pred: impl Fn(&Monomial) -> bool) -> Self {
        RingElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| pred(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Exact division by a polynomial in the single generator `g` with nonzero
    /// constant term. Returns `None` when the quotient leaves a remainder.
    pub fn div_exact_univariate(&self, g: Gen, divisor: &RingElement) -> Option<Self> {
        // divisor as dense coefficients in g
        let mut dcoef: Vec<BigRational> = Vec::new();
        for (m, c) in divisor.terms() {
            let (rest, e) = m.split_off(g);
            if !rest.is_one() || e < 0 {
                return None;
            }
            let e = e as usize;
            if dcoef.len() <= e {
                dcoef.resize(e + 1, BigRational::zero());
            }
            dcoef[e] = c.clone();
        }
        if dcoef.first().is_none_or(|c| c.is_zero()) {
            return None;
        }
        let dlen = dcoef.len();
        let lead = dcoef[dlen - 1].clone();

        let mut groups: BTreeMap<Monomial, BTreeMap<i32, BigRational>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(g);
            groups.entry(rest).or_default().insert(e, c.clone());
        }
        let mut out = RingElement::zero();
        for (rest, poly) in groups {
            let lo = *poly.keys().next().expect("nonempty");
            let hi = *poly.keys().next_back().expect("nonempty");
            let mut rem: Vec<BigRational> = (lo..=hi)
                .map(|e| poly.get(&e).cloned().unwrap_or_else(BigRational::zero))
                .collect();
            if rem.len() < dlen {
                return None;
            }
            let qlen = rem.len() - dlen + 1;
            let mut quot = vec![BigRational::zero(); qlen];
            for k in (0..qlen).rev() {
                let q = &rem[k + dlen - 1] / &lead;
                if !q.is_zero() {
                    for (i, d) in dcoef.iter().enumerate() {
                        rem[k + i] -= &q * d;
                    }
                }
                quot[k] = q;
            }
            if rem.iter().any(|c| !c.is_zero()) {
                return None;
            }
            for (k, q) in quot.into_iter().enumerate() {
                if q.is_zero() {
                    continue;
                }
                let mut f: Vec<(Gen, i32)> = rest.factors().to_vec();
                f.push((g, lo + k as i32));
                out.add_term(Monomial::new(f).ok()?, q);
            }
        }
        Some(out)
    }

    /// Exponent range of `g`, `None` for zero.
    pub fn degree_range(&self, g: Gen) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.exponent(g));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }
}

impl From<BigRational> for RingElement {
    fn from(c: BigRational) -> Self {
        RingElement::constant(c)
    }
}

impl From<i64> for RingElement {
    fn from(n: i64) -> Self {
        RingElement::int(n)
    }
}

impl From<Gen> for RingElement {
    fn from(g: Gen) -> Self {
        RingElement::gen(g)
    }
}

impl AddAssign<&RingElement> for RingElement {
    fn add_assign(&mut self, rhs: &RingElement) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&RingElement> for RingElement {
    fn sub_assign(&mut self, rhs: &RingElement) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        if self.is_zero() || rhs.is_zero() {
            return RingElement::zero();
        }
        let mut out = RingElement::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RingElement {
            type Output = RingElement;
            fn $f(self, rhs: RingElement) -> RingElement {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&RingElement> for RingElement {
            type Output = RingElement;
            fn $f(self, rhs: &RingElement) -> RingElement {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(k: u32) -> RingElement {
        RingElement::gen(Gen::Zeta(k))
    }
    fn ipi2(e: i32) -> RingElement {
        RingElement::gen_pow(Gen::Ipi2, e).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!((z(2) * ipi2(-2)).reduce(), RingElement::ratio(-1, 24));
        let odd = RingElement::gen(Gen::Gamma) * z(3) * ipi2(-3);
        assert_eq!(odd.reduce(), odd);
        assert_eq!(
            (z(2) * z(2) * ipi2(-4)).reduce(),
            RingElement::ratio(1, 576)
        );
        let r = (z(2) * ipi2(-2)).reduce();
        assert_eq!(r.reduce(), r);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(
            RingElement::ratio(5, 7).conjugate(),
            RingElement::ratio(5, 7)
        );
        let x = z(3) * ipi2(-3);
        assert_eq!(x.conjugate(), -&x);
        let y = RingElement::gen(Gen::Gamma) * ipi2(-1);
        assert_eq!(y.conjugate(), -&y);
    }

    #[test]
    fn weight_examples() {
        let g = RingElement::gen(Gen::Gamma);
        assert_eq!((&g * &g).weight(), Some(2));
        assert_eq!((z(3) * ipi2(-3)).weight(), Some(0));
        assert_eq!((&g + &z(2)).weight(), None);
    }

    #[test]
    fn display_is_readable() {
        let x = RingElement::int(2) * RingElement::gen(Gen::Gamma) - z(3) * ipi2(-3);
        assert_eq!(x.to_string(), "-ipi2^-3*zeta3 + 2*gamma");
    }

    #[test]
    fn exact_univariate_division() {
        let t = RingElement::gen(Gen::T);
        let one_plus_t = &RingElement::one() + &t;
        let num = &RingElement::one() - &t.pow(4);
        let q = num.div_exact_univariate(Gen::T, &one_plus_t).unwrap();
        assert_eq!(&q * &one_plus_t, num);
        assert!(RingElement::one()
            .div_exact_univariate(Gen::T, &one_plus_t)
            .is_none());
        // Laurent dividend
        let lau = &(&t.pow(2) - &RingElement::one()) * &RingElement::gen_pow(Gen::T, -3).unwrap();
        let q = lau.div_exact_univariate(Gen::T, &one_plus_t).unwrap();
        assert_eq!(&q * &one_plus_t, lau);
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let t = RingElement::gen(Gen::T);
        let u = RingElement::gen(Gen::U);
        let x = &(&t * &t) + &RingElement::gen_pow(Gen::T, -1).unwrap();
        let y = x.substitute_gen(Gen::T, &(&u * &u)).unwrap();
        let expect = &u.pow(4) + &RingElement::gen_pow(Gen::U, -2).unwrap();
        assert_eq!(y, expect);
        assert!(x.substitute_gen(Gen::T, &RingElement::zero()).is_err());
    }
}
