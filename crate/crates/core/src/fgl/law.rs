use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};

use crate::check::CheckOutcome;
use crate::error::{Error, Result};
use crate::ring::{Gen, RingElement};
use crate::series::{MSeries, Series1, Series2};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    FromExponential,
    ClosedForm,
    FromGerm,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::FromExponential => "from-exponential",
            Construction::ClosedForm => "closed-form",
            Construction::FromGerm => "from-germ",
        })
    }
}

/// A one-dimensional formal group law `F(z0, z1)` truncated at total degree `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalGroupLaw {
    f: Series2,
    name: String,
    params: BTreeMap<String, RingElement>,
    construction: Construction,
}

impl FormalGroupLaw {
    /// Wraps `f`, rejecting series that violate `F(z,0) = F(0,z) = z`.
    pub fn new(
        name: impl Into<String>,
        f: Series2,
        params: BTreeMap<String, RingElement>,
        construction: Construction,
    ) -> Result<Self> {
        let name = name.into();
        let z = Series1::var(f.order());
        if f.restrict_z1_zero() != z || f.restrict_z0_zero() != z {
            return Err(Error::NotAUnit(name));
        }
        Ok(FormalGroupLaw {
            f,
            name,
            params,
            construction,
        })
    }

    pub fn series(&self) -> &Series2 {
        &self.f
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn params(&self) -> &BTreeMap<String, RingElement> {
        &self.params
    }

    pub fn construction(&self) -> Construction {
        self.construction
    }

    pub fn order(&self) -> usize {
        self.f.order()
    }

    pub fn truncate(&self, order: usize) -> Self {
        FormalGroupLaw {
            f: self.f.truncate(order),
            ..self.clone()
        }
    }

    /// Applies a coefficient-ring homomorphism sending the listed generators to
    /// the given values, recording them as parameters.
    pub fn specialize(&self, values: &[(Gen, RingElement)]) -> Result<Self> {
        let lookup: BTreeMap<Gen, RingElement> = values.iter().cloned().collect();
        let f = self
            .f
            .try_map_coeffs(|c| c.substitute(|g| lookup.get(&g).cloned()))?;
        let mut params = self.params.clone();
        for (g, v) in values {
            params.insert(g.to_string(), v.clone());
        }
        FormalGroupLaw::new(self.name.clone(), f, params, self.construction)
    }

    /// The logarithm from the invariant differential `L'(z) = 1/(∂F/∂z1)(z, 0)`.
    pub fn logarithm(&self) -> Result<Series1> {
        let differential = self.f.d_z1_at_zero().inverse()?;
        Ok(differential.integral())
    }

    pub fn exponential(&self) -> Result<Series1> {
        self.logarithm()?.revert()
    }

    /// `F(a(z), b(z))` for univariate `a, b` without constant term.
    pub fn eval_univariate(&self, a: &Series1, b: &Series1) -> Result<Series1> {
        let n = self.order().min(a.order()).min(b.order());
        let a1 = MSeries::from_univariate(1, n, 0, a);
        let b1 = MSeries::from_univariate(1, n, 0, b);
        let m = self.f.substitute(&a1, &b1)?;
        Ok(Series1::from_fn(n, |k| m.get(&[k as u32])))
    }

    /// The `[−1]`-series `i(z)` with `F(z, i(z)) = 0`, found by the iteration
    /// `w ← w − F(z, w)`, which gains one degree per step over any ring.
    pub fn negation_series(&self) -> Result<Series1> {
        let n = self.order();
        let z = Series1::var(n);
        let mut w = -&z;
        for _ in 0..n {
            let r = self.eval_univariate(&z, &w)?;
            if r.is_zero() {
                break;
            }
            w = &w - &r;
        }
        Ok(w)
    }

    /// `[n](z)` by iterating the law: `[n] = F(z, [n−1])`, `[−n] = [n]∘[−1]`.
    pub fn n_series(&self, n: i64) -> Result<Series1> {
        let order = self.order();
        let z = Series1::var(order);
        let mut acc = Series1::zero(order);
        for _ in 0..n.unsigned_abs() {
            acc = self.eval_univariate(&z, &acc)?;
        }
        if n < 0 {
            acc = acc.compose(&self.negation_series()?)?;
        }
        Ok(acc)
    }

    pub fn check_axioms(&self) -> AxiomReport {
        AxiomReport {
            unit: self.check_unit(),
            commutativity: self.check_commutativity(),
            associativity: self.check_associativity(),
        }
    }

    fn check_unit(&self) -> CheckOutcome {
        let z = Series1::var(self.order());
        let mut out = CheckOutcome::Pass;
        for restricted in [self.f.restrict_z1_zero(), self.f.restrict_z0_zero()] {
            if let Some(k) = (0..=self.order()).find(|&k| restricted.coeff(k) != z.coeff(k)) {
                out = out.and(CheckOutcome::fail(k, restricted.coeff(k) - z.coeff(k)));
            }
        }
        out
    }

    fn check_commutativity(&self) -> CheckOutcome {
        crate::check::first_difference(
            self.f
                .iter()
                .map(|((i, j), c)| (i + j, c.clone(), self.f.get(j, i).clone())),
        )
        .and(crate::check::first_difference(
            self.f
                .swap()
                .iter()
                .map(|((i, j), c)| (i + j, self.f.get(i, j).clone(), c.clone())),
        ))
    }

    /// `F(z0, F(z1, z2)) = F(F(z0, z1), z2)` through total degree `N`.
    ///
    /// With `F = Σ c_ij z0^i z1^j`, the coefficient of `x^a y^b w^c` is
    /// `Σ_j c_aj [y^b w^c] F^j` on the left and `Σ_i c_ic [x^a y^b] F^i` on the
    /// right, so only bivariate powers of `F` are needed.
    fn check_associativity(&self) -> CheckOutcome {
        let n = self.order();
        let mut powers = vec![Series2::constant(n, RingElement::one())];
        for k in 1..=n {
            powers.push(&powers[k - 1] * &self.f);
        }
        for d in 0..=n {
            for a in (0..=d).rev() {
                for b in (0..=(d - a)).rev() {
                    let c = d - a - b;
                    let mut lhs = RingElement::zero();
                    let mut rhs = RingElement::zero();
                    for k in 0..=(n - a).min(b + c) {
                        let f = self.f.get(a, k);
                        if !f.is_zero() {
                            lhs += &(f * powers[k].get(b, c));
                        }
                    }
                    for k in 0..=(n - c).min(a + b) {
                        let f = self.f.get(k, c);
                        if !f.is_zero() {
                            rhs += &(f * powers[k].get(a, b));
                        }
                    }
                    if lhs != rhs {
                        return CheckOutcome::fail(d, lhs - rhs);
                    }
                }
            }
        }
        CheckOutcome::Pass
    }

    pub fn to_json(&self) -> Value {
        let params: Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), v.to_json()))
            .collect();
        json!({
            "name": self.name,
            "params": params,
            "order": self.order(),
            "F": self.f.to_json(),
        })
    }
}

/// Per-axiom outcome of [`FormalGroupLaw::check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub unit: CheckOutcome,
    pub commutativity: CheckOutcome,
    pub associativity: CheckOutcome,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.unit.is_pass() && self.commutativity.is_pass() && self.associativity.is_pass()
    }

    pub fn to_json(&self) -> Value {
        let enc = |c: &CheckOutcome| match c {
            CheckOutcome::Pass => json!("PASS"),
            fail => fail.to_json(),
        };
        json!({
            "unit": enc(&self.unit),
            "commutativity": enc(&self.commutativity),
            "associativity": enc(&self.associativity),
        })
    }
}

/// `φ = exp_G ∘ log_F`, the unique strict isomorphism from `F` to `G`.
pub fn canonical_strict_iso(f: &FormalGroupLaw, g: &FormalGroupLaw) -> Result<Series1> {
    let n = f.order().min(g.order());
    let log_f = f.truncate(n).logarithm()?;
    let exp_g = g.truncate(n).exponential()?;
    exp_g.compose(&log_f)
}

/// Checks `φ(F(z0, z1)) = G(φ(z0), φ(z1))` through the common order.
pub fn verify_iso(phi: &Series1, f: &FormalGroupLaw, g: &FormalGroupLaw) -> Result<CheckOutcome> {
    if !phi.coeff(0).is_zero() {
        return Err(Error::InnerConstantNonzero);
    }
    let n = phi.order().min(f.order()).min(g.order());
    let phi = phi.truncate(n);
    let lhs = phi.compose_bivariate(&f.series().truncate(n))?;
    let a = MSeries::from_univariate(2, n, 0, &phi);
    let b = MSeries::from_univariate(2, n, 1, &phi);
    let rhs = Series2::from_multi(&g.series().truncate(n).substitute(&a, &b)?);
    Ok(crate::check::first_difference(
        lhs.iter()
            .map(|((i, j), c)| (i + j, c.clone(), rhs.get(i, j).clone()))
            .chain(
                rhs.iter()
                    .map(|((i, j), c)| (i + j, lhs.get(i, j).clone(), c.clone())),
            ),
    ))
}

/// `[n](t) = (t^{n/2} − t^{−n/2})/(t^{1/2} − t^{−1/2}) = Σ_{j<n} u^{n−1−2j}` with `u² = t`.
pub fn gaussian_bracket(n: u32) -> Result<RingElement> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "gaussian_bracket needs n >= 1".into(),
        ));
    }
    let mut out = RingElement::zero();
    for j in 0..n {
        out += &RingElement::gen_pow(Gen::U, (n - 1) as i32 - 2 * j as i32)?;
    }
    Ok(out)
}
