//! The Witten series `(x/2)/sinh(x/2) · Π_{n≥1} [(1 − qⁿeˣ)(1 − qⁿe⁻ˣ)]⁻¹`
//! as a double truncation in `x` and `q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::check::{first_difference, CheckOutcome};
use crate::error::{Error, Result};
use crate::genus::ahat_h;
use crate::ring::{factorial, zeta_tilde_even, Gen, RingElement};
use crate::series::Series1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittenSeries {
    x_order: usize,
    q_order: usize,
    h: Series1,
}

impl WittenSeries {
    /// `x`-series whose coefficients are polynomials in `q` of degree `≤ q_order`.
    pub fn series(&self) -> &Series1 {
        &self.h
    }

    pub fn x_order(&self) -> usize {
        self.x_order
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    /// `[x^i q^j]`.
    pub fn coeff(&self, i: usize, j: usize) -> BigRational {
        let m = crate::ring::Monomial::gen(Gen::Q, j as i32).expect("q exponent");
        self.h.coeff(i).coefficient(&m)
    }

    /// `log H_W`, normalized through the `x⁰` row `Π(1 − qⁿ)⁻²`.
    pub fn log(&self) -> Result<Series1> {
        let mut row = RingElement::one();
        for n in 1..=self.q_order {
            let f = &RingElement::one() - &RingElement::gen_pow(Gen::Q, n as i32)?;
            row = self.cut(&(&(&row * &f) * &f));
        }
        let normalized = self.h.map_coeffs(|c| self.cut(&(c * &row)));
        let mut log = normalized.log_series()?.map_coeffs(|c| self.cut(c));
        // log of the x⁰ row: Σ_n 2·Σ_m q^{nm}/m
        let mut row_log = RingElement::zero();
        for n in 1..=self.q_order {
            for m in 1..=self.q_order / n {
                let term = RingElement::gen_pow(Gen::Q, (n * m) as i32)?;
                row_log += &term.scale(&BigRational::new(2.into(), m.into()));
            }
        }
        log.set_coeff(0, &log.coeff(0).clone() + &row_log);
        Ok(log)
    }

    fn cut(&self, c: &RingElement) -> RingElement {
        c.truncate_gen(Gen::Q, self.q_order as i32)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..=self.x_order)
            .map(|i| {
                let q: Vec<String> = (0..=self.q_order)
                    .map(|j| crate::ring::rational_string(&self.coeff(i, j)))
                    .collect();
                json!({"x": i, "q": q})
            })
            .collect();
        json!({"x_order": self.x_order, "q_order": self.q_order, "rows": rows})
    }
}

pub fn witten_series(x_order: usize, q_order: usize) -> Result<WittenSeries> {
    if x_order < 2 || q_order < 2 {
        return Err(Error::OrderTooSmall {
            got: x_order.min(q_order),
            min: 2,
        });
    }
    let cut = |c: &RingElement| c.truncate_gen(Gen::Q, q_order as i32);
    let mut h = ahat_h(x_order);
    for n in 1..=q_order {
        for sign in [1i64, -1] {
            // Σ_m q^{nm} e^{±mx}
            let mut factor = Series1::zero(x_order);
            for m in 0..=q_order / n {
                let q = RingElement::gen_pow(Gen::Q, (n * m) as i32)?;
                let e = Series1::exp_linear(x_order, &RingElement::int(sign * m as i64));
                factor = &factor + &e.scale(&q);
            }
            h = (&h * &factor).map_coeffs(cut);
        }
    }
    Ok(WittenSeries {
        x_order,
        q_order,
        h,
    })
}

/// `σ_j(n) = Σ_{d | n} d^j`.
pub fn divisor_sigma(j: u32, n: usize) -> BigInt {
    (1..=n)
        .filter(|d| n % d == 0)
        .map(|d| BigInt::from(d).pow(j))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittenReport {
    pub evenness: CheckOutcome,
    /// `q⁰` row against `exp(Σ ζ̃(2k) x^{2k}/k)`.
    pub q_zero: CheckOutcome,
    /// For `k ≤ k_max`: `(2k)[x^{2k}] log H_W = 2ζ̃(2k) + (4k/(2k)!) Σ_n σ_{2k−1}(n) qⁿ`.
    pub eisenstein: CheckOutcome,
    /// Same comparison with constant term `ζ̃(2k)` in place of `2ζ̃(2k)`.
    pub eisenstein_single_constant: CheckOutcome,
}

impl WittenReport {
    pub fn is_pass(&self) -> bool {
        self.evenness.is_pass() && self.q_zero.is_pass() && self.eisenstein.is_pass()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "evenness": self.evenness.to_json(),
            "q_zero": self.q_zero.to_json(),
            "eisenstein": self.eisenstein.to_json(),
            "eisenstein_single_constant": self.eisenstein_single_constant.to_json(),
        })
    }
}

pub fn witten_checks(w: &WittenSeries, k_max: usize) -> Result<WittenReport> {
    let n = w.x_order();
    let evenness = first_difference(
        (1..=n)
            .step_by(2)
            .map(|i| (i, w.series().coeff(i).clone(), RingElement::zero())),
    );

    let mut exponent = Series1::zero(n);
    for k in 1..=n / 2 {
        let c = zeta_tilde_even(k as u32)? / BigRational::from_integer(k.into());
        exponent.set_coeff(2 * k, RingElement::constant(c));
    }
    let ahat = exponent.exp_series()?;
    let q_zero = first_difference((0..=n).map(|i| {
        let row = w.series().coeff(i).truncate_gen(Gen::Q, 0);
        (i, row, ahat.coeff(i).clone())
    }));

    let log = w.log()?;
    let mut doubled = Vec::new();
    let mut single = Vec::new();
    for k in 1..=k_max.min(n / 2) {
        let lhs = log
            .coeff(2 * k)
            .scale(&BigRational::from_integer((2 * k).into()));
        let mut tail = RingElement::zero();
        let scale = BigRational::new((4 * k).into(), factorial(2 * k));
        for m in 1..=w.q_order() {
            let c = BigRational::from_integer(divisor_sigma(2 * k as u32 - 1, m)) * &scale;
            tail += &RingElement::term(crate::ring::Monomial::gen(Gen::Q, m as i32)?, c);
        }
        let zt = RingElement::constant(zeta_tilde_even(k as u32)?);
        doubled.push((2 * k, lhs.clone(), &(&zt + &zt) + &tail));
        single.push((2 * k, lhs, &zt + &tail));
    }
    Ok(WittenReport {
        evenness,
        q_zero,
        eisenstein: first_difference(doubled),
        eisenstein_single_constant: first_difference(single),
    })
}
