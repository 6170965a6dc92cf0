use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;

use crate::check::CheckOutcome;
use crate::error::{Error, Result};
use crate::ring::{Gen, Monomial, RingElement};
use crate::series::{MSeries, Series1};
use crate::symfun::{convert_element, Basis, SymPoly};

/// Which presentation of the Γ-constants to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Presentation {
    /// `s_1 ↦ γ`, `s_k ↦ ζ(k)`.
    Raw,
    /// `s_k ↦ ζ(k)·(2πi)^{−k}` (and `γ·(2πi)^{−1}`), reduced.
    Normalized,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Presentation::Raw => "raw",
            Presentation::Normalized => "normalized",
        })
    }
}

impl FromStr for Presentation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(Presentation::Raw),
            "normalized" => Ok(Presentation::Normalized),
            _ => Err(Error::Parse(format!("unknown presentation {s:?}"))),
        }
    }
}

/// The image of `s_k` under the zeta specialization.
pub fn zeta_image(k: u32, presentation: Presentation) -> RingElement {
    let base = if k == 1 {
        RingElement::gen(Gen::Gamma)
    } else {
        RingElement::gen(Gen::Zeta(k))
    };
    match presentation {
        Presentation::Raw => base,
        Presentation::Normalized => {
            (&base * &RingElement::gen_pow(Gen::Ipi2, -(k as i32)).expect("laurent")).reduce()
        }
    }
}

/// Specializes the `basis` generators of `x` through the power sums.
pub fn zeta_specialize_element(
    x: &RingElement,
    basis: Basis,
    presentation: Presentation,
) -> RingElement {
    let p = convert_element(x, basis, Basis::P);
    let out = p
        .substitute(|g| match g {
            Gen::S(k) => Some(zeta_image(k, presentation)),
            _ => None,
        })
        .expect("power sums occur with nonnegative exponents");
    match presentation {
        Presentation::Raw => out,
        Presentation::Normalized => out.reduce(),
    }
}

pub fn zeta_specialize(x: &SymPoly, presentation: Presentation) -> RingElement {
    zeta_specialize_element(x.poly(), x.basis(), presentation)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    /// Polynomials in `c_k`, weight `k`.
    Chern,
    /// Polynomials in `p_k`, weight `2k`.
    Pontryagin,
}

impl ClassKind {
    fn index_of(self, g: Gen) -> Option<u32> {
        match (self, g) {
            (ClassKind::Chern, Gen::C(k)) | (ClassKind::Pontryagin, Gen::P(k)) => Some(k),
            _ => None,
        }
    }

    fn gen(self, k: u32) -> Gen {
        match self {
            ClassKind::Chern => Gen::C(k),
            ClassKind::Pontryagin => Gen::P(k),
        }
    }
}

/// A polynomial in characteristic classes with [`RingElement`] coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernPolynomial {
    kind: ClassKind,
    poly: RingElement,
}

/// Chern or Pontryagin numbers of a manifold, keyed by class monomial.
pub type CharacteristicNumbers = BTreeMap<Monomial, BigRational>;

impl ChernPolynomial {
    pub fn new(kind: ClassKind, poly: RingElement) -> Self {
        ChernPolynomial { kind, poly }
    }

    pub fn kind(&self) -> ClassKind {
        self.kind
    }

    pub fn poly(&self) -> &RingElement {
        &self.poly
    }

    /// Weight of the class part of a monomial (`c_k ↦ k`, `p_k ↦ 2k`).
    pub fn class_weight(&self, m: &Monomial) -> i64 {
        m.factors()
            .iter()
            .filter(|&&(g, _)| self.kind.index_of(g).is_some())
            .map(|&(g, e)| g.weight() * e as i64)
            .sum()
    }

    /// Homogeneous component of class weight `w`.
    pub fn component(&self, w: i64) -> ChernPolynomial {
        ChernPolynomial {
            kind: self.kind,
            poly: self.poly.filter(|m| self.class_weight(m) == w),
        }
    }

    /// Pairs the class monomials with the given characteristic numbers.
    pub fn evaluate(&self, numbers: &CharacteristicNumbers) -> Result<RingElement> {
        let mut out = RingElement::zero();
        for (m, c) in self.poly.terms() {
            let (class, rest): (Vec<_>, Vec<_>) = m
                .factors()
                .iter()
                .partition(|&&(g, _)| self.kind.index_of(g).is_some());
            let class = Monomial::new(class)?;
            let value = numbers
                .get(&class)
                .ok_or_else(|| Error::IncompleteChernTable(class.to_string()))?;
            out += &RingElement::term(Monomial::new(rest)?, c * value);
        }
        Ok(out)
    }
}

impl fmt::Display for ChernPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Substitutes `s_k ↦ (s_k in the e basis)` with `e_j` renamed to the class
/// generators of `kind`. Coefficients must not involve power sums.
fn power_sums_to_classes(x: &RingElement, kind: ClassKind) -> RingElement {
    let degree = crate::symfun::basis_degree(x, Basis::P);
    let images: Vec<RingElement> = crate::symfun::basis_images(Basis::P, Basis::E, degree)
        .iter()
        .map(|img| {
            img.substitute(|g| match g {
                Gen::E(k) => Some(RingElement::gen(kind.gen(k))),
                _ => None,
            })
            .expect("nonnegative exponents")
        })
        .collect();
    x.substitute(|g| match g {
        Gen::S(k) => Some(images[k as usize].clone()),
        _ => None,
    })
    .expect("nonnegative exponents")
}

/// Rewrites an even symmetric expression (in `basis` generators, arbitrary
/// coefficients) in `p_k = e_k(x_i²)`.
pub fn pontryagin_from_element(x: &RingElement, basis: Basis) -> Result<ChernPolynomial> {
    let p = convert_element(x, basis, Basis::P);
    for (m, _) in p.terms() {
        if let Some(&(g, _)) = m
            .factors()
            .iter()
            .find(|&&(g, _)| matches!(g, Gen::S(k) if k % 2 == 1))
        {
            return Err(Error::OddContent(format!("{g} in {p}")));
        }
    }
    // s_{2k}(x) = s_k(y) in the squared alphabet y_i = x_i²
    let squared = p.substitute(|g| match g {
        Gen::S(k) => Some(RingElement::gen(Gen::S(k / 2))),
        _ => None,
    })?;
    Ok(ChernPolynomial::new(
        ClassKind::Pontryagin,
        power_sums_to_classes(&squared, ClassKind::Pontryagin),
    ))
}

pub fn pontryagin_from_chern(f: &SymPoly) -> Result<ChernPolynomial> {
    pontryagin_from_element(f.poly(), f.basis())
}

/// `s_{2k}` over `{±x_1, …, ±x_m}` equals `2·s_{2k}(x)`, and `s_{2k+1}` over
/// the doubled alphabet vanishes.
pub fn symplectic_power_sum_check(m: usize, k: usize) -> Result<CheckOutcome> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidArgument(
            "symplectic check needs m, k >= 1".into(),
        ));
    }
    let order = 2 * k + 1;
    let doubled_sum = |exp: usize| {
        let mut acc = MSeries::zero(m, order);
        for i in 0..m {
            let x = MSeries::var(m, order, i);
            for root in [x.clone(), -&x] {
                let mut p = MSeries::one(m, order);
                for _ in 0..exp {
                    p = &p * &root;
                }
                acc = &acc + &p;
            }
        }
        acc
    };
    let single = crate::symfun::root_polynomials(Basis::P, m, order)[2 * k].int_scale(2);
    let even = match doubled_sum(2 * k).first_difference(&single) {
        None => CheckOutcome::Pass,
        Some((d, _, c)) => CheckOutcome::fail(d, c),
    };
    let odd = match doubled_sum(2 * k + 1).first_difference(&MSeries::zero(m, order)) {
        None => CheckOutcome::Pass,
        Some((d, _, c)) => CheckOutcome::fail(d, c),
    };
    Ok(even.and(odd))
}

/// `K_1, …, K_n` with `Π_i H(x_i) = 1 + Σ_j K_j(c_1, c_2, …)`, `c_k = e_k(x)`.
///
/// Uses `Π H(x_i) = exp(Σ_k a_k s_k)` where `log H = Σ a_k z^k`.
pub fn multiplicative_sequence(h: &Series1, n: usize) -> Result<Vec<ChernPolynomial>> {
    if !h.coeff(0).is_one() {
        return Err(Error::BadConstantTerm(
            "multiplicative sequence (needs H(0) = 1)",
        ));
    }
    if h.order() < n {
        return Err(Error::InsufficientOrder {
            have: h.order(),
            need: n,
        });
    }
    let log = h.truncate(n).log_series()?;
    let graded = Series1::from_fn(n, |k| match k {
        0 => RingElement::zero(),
        _ => log.coeff(k) * &RingElement::gen(Gen::S(k as u32)),
    });
    let total = graded.exp_series()?;
    Ok((1..=n)
        .map(|j| {
            ChernPolynomial::new(
                ClassKind::Chern,
                power_sums_to_classes(total.coeff(j), ClassKind::Chern),
            )
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use crate::symfun::expand_element_in_roots;

    fn c(k: u32) -> RingElement {
        RingElement::gen(Gen::C(k))
    }

    fn p(k: u32) -> RingElement {
        RingElement::gen(Gen::P(k))
    }

    #[test]
    fn zeta_specialization_examples() {
        let s2 = SymPoly::gen(Basis::P, 2);
        assert_eq!(
            zeta_specialize(&s2, Presentation::Raw),
            RingElement::gen(Gen::Zeta(2))
        );
        assert_eq!(
            zeta_specialize(&s2, Presentation::Normalized),
            RingElement::ratio(-1, 24)
        );
        let g = RingElement::gen(Gen::Gamma);
        let expect = (&(&g * &g) - &RingElement::gen(Gen::Zeta(2))).scale(&rat(1, 2));
        assert_eq!(
            zeta_specialize(&SymPoly::gen(Basis::E, 2), Presentation::Raw),
            expect
        );
    }

    #[test]
    fn pontryagin_examples() {
        assert_eq!(
            pontryagin_from_chern(&SymPoly::gen(Basis::P, 2))
                .unwrap()
                .poly(),
            &p(1)
        );
        let s4 = pontryagin_from_chern(&SymPoly::gen(Basis::P, 4)).unwrap();
        assert_eq!(s4.poly(), &(&(&p(1) * &p(1)) - &p(2).scale(&rat(2, 1))));
        assert!(matches!(
            pontryagin_from_chern(&SymPoly::gen(Basis::P, 3)),
            Err(Error::OddContent(_))
        ));
        // e_1 = s_1 is odd
        assert!(pontryagin_from_chern(&SymPoly::gen(Basis::E, 1)).is_err());
    }

    #[test]
    fn symplectic_power_sums() {
        for (m, k) in [(1, 1), (2, 2), (3, 1)] {
            assert!(symplectic_power_sum_check(m, k).unwrap().is_pass());
        }
    }

    fn todd(n: usize) -> Series1 {
        // x/(1 − e^{−x}) = 1/((1 − e^{−x})/x)
        let d = Series1::from_rationals(n, |k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            crate::ring::rat(sign, 1) / BigRational::from_integer(crate::ring::factorial(k + 1))
        });
        d.inverse().unwrap()
    }

    #[test]
    fn todd_sequence() {
        let k = multiplicative_sequence(&todd(3), 3).unwrap();
        assert_eq!(k[0].poly(), &c(1).scale(&rat(1, 2)));
        assert_eq!(k[1].poly(), &(&(&c(1) * &c(1)) + &c(2)).scale(&rat(1, 12)));
        assert_eq!(k[2].poly(), &(&c(1) * &c(2)).scale(&rat(1, 24)));
        let trivial = multiplicative_sequence(&Series1::one(4), 4).unwrap();
        assert!(trivial.iter().all(|k| k.poly().is_zero()));
    }

    #[test]
    fn sequence_matches_root_oracle() {
        // Π H(x_i) over m = n roots, with symbolic coefficients in H
        let n = 4;
        let h = Series1::from_fn(n, |k| match k {
            0 => RingElement::one(),
            1 => RingElement::gen(Gen::Gamma),
            _ => RingElement::gen(Gen::Zeta(k as u32)),
        });
        let seq = multiplicative_sequence(&h, n).unwrap();
        let mut prod = MSeries::one(n, n);
        for i in 0..n {
            prod = &prod * &MSeries::from_univariate(n, n, i, &h);
        }
        let mut total = RingElement::one();
        for k in &seq {
            total += &k
                .poly()
                .substitute(|g| match g {
                    Gen::C(j) => Some(RingElement::gen(Gen::E(j))),
                    _ => None,
                })
                .unwrap();
        }
        assert_eq!(expand_element_in_roots(&total, Basis::E, n, n), prod);
    }

    #[test]
    fn evaluate_needs_every_number() {
        let k2 = ChernPolynomial::new(
            ClassKind::Chern,
            (&(&c(1) * &c(1)) + &c(2)).scale(&rat(1, 12)),
        );
        let mut table = CharacteristicNumbers::new();
        table.insert(Monomial::gen(Gen::C(1), 2).unwrap(), rat(9, 1));
        assert!(matches!(
            k2.evaluate(&table),
            Err(Error::IncompleteChernTable(_))
        ));
        table.insert(Monomial::gen(Gen::C(2), 1).unwrap(), rat(3, 1));
        assert_eq!(k2.evaluate(&table).unwrap(), RingElement::one());
    }
}
