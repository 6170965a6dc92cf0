//! Adjudication of the coordinate change
//! `z ↦ (1+t)^{−1} log M(z)` with `M = [[t, 1], [−1, 1]]`.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::check::CheckOutcome;
use crate::error::Result;
use crate::fgl::{canonical_strict_iso, catalog, verify_iso, Construction, FormalGroupLaw};
use crate::ring::{Gen, RingElement};
use crate::series::{Series1, Series2};

/// A reading of the matrix as a fractional linear map `z ↦ (az + b)/(cz + d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MobiusConvention {
    /// `M` acting on column vectors.
    Column,
    /// `M^{−1}` acting on column vectors.
    ColumnInverse,
    /// `M` acting on row vectors, i.e. `Mᵀ` on columns.
    Row,
    /// `(Mᵀ)^{−1}` on columns.
    RowInverse,
}

pub const CONVENTIONS: [MobiusConvention; 4] = [
    MobiusConvention::Column,
    MobiusConvention::ColumnInverse,
    MobiusConvention::Row,
    MobiusConvention::RowInverse,
];

pub const TARGETS: [&str; 3] = ["additive", "multiplicative", "multiplicative_t"];

impl MobiusConvention {
    pub fn label(self) -> &'static str {
        match self {
            MobiusConvention::Column => "column",
            MobiusConvention::ColumnInverse => "column-inverse",
            MobiusConvention::Row => "row",
            MobiusConvention::RowInverse => "row-inverse",
        }
    }

    /// `[[a, b], [c, d]]`, up to an overall scalar.
    pub fn matrix(self) -> [RingElement; 4] {
        let t = RingElement::gen(Gen::T);
        let one = RingElement::one;
        let m1 = || RingElement::int(-1);
        match self {
            MobiusConvention::Column => [t, one(), m1(), one()],
            MobiusConvention::ColumnInverse => [one(), m1(), one(), t],
            MobiusConvention::Row => [t, m1(), one(), one()],
            MobiusConvention::RowInverse => [one(), one(), m1(), t],
        }
    }
}

/// Outcome of one convention/target pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AdjudicationStatus {
    Checked(CheckOutcome),
    Undefined(String),
}

impl AdjudicationStatus {
    pub fn is_pass(&self) -> bool {
        matches!(self, AdjudicationStatus::Checked(CheckOutcome::Pass))
    }

    fn to_json(&self) -> Value {
        match self {
            AdjudicationStatus::Checked(c) => c.to_json(),
            AdjudicationStatus::Undefined(why) => json!({"status": "UNDEFINED", "reason": why}),
        }
    }
}

#[derive(Debug, Clone)]
pub struct AdjudicationRow {
    pub convention: MobiusConvention,
    pub target: &'static str,
    /// True when `M(0) ≠ 1` and the argument of the logarithm was divided by `M(0)`.
    pub normalized: bool,
    pub status: AdjudicationStatus,
}

#[derive(Debug, Clone)]
pub struct Adjudication {
    pub order: usize,
    pub rows: Vec<AdjudicationRow>,
    pub canonical: Series1,
    pub canonical_status: CheckOutcome,
    /// The column reading checked as an isomorphism from `−K_{−t}(−z0, −z1)` to
    /// the additive law.
    pub conjugate_diagnostic: AdjudicationStatus,
}

impl Adjudication {
    pub fn any_mobius_pass(&self) -> bool {
        self.rows.iter().any(|r| r.status.is_pass())
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "convention": r.convention.label(),
                    "target": r.target,
                    "normalized": r.normalized,
                    "result": r.status.to_json(),
                })
            })
            .collect();
        json!({
            "order": self.order,
            "mobius": rows,
            "canonical": {
                "from": "kontsevich",
                "to": "multiplicative",
                "phi": self.canonical.to_json(),
                "result": self.canonical_status.to_json(),
            },
            "column_vs_conjugate_kontsevich_to_additive": self.conjugate_diagnostic.to_json(),
        })
    }
}

/// `(1+t)^{−1} log(w(z)/w(0))` for `w = (az + b)/(cz + d)`, or a reason why
/// the expression does not define a series over the coefficient ring.
pub fn mobius_coordinate_change(
    conv: MobiusConvention,
    order: usize,
) -> Result<std::result::Result<(Series1, bool), String>> {
    let [a, b, c, d] = conv.matrix();
    let mut num = Series1::constant(order, b.clone());
    num.set_coeff(1, a);
    let mut den = Series1::constant(order, d.clone());
    den.set_coeff(1, c);
    let w = num.try_div(&den)?;
    let w0 = w.coeff(0).clone();
    let Some(w0_inv) = w0.inverse_unit() else {
        return Ok(Err(format!("M(0) = {w0} is not a unit")));
    };
    let log = w.scale(&w0_inv).log_series()?;
    let one_plus_t = &RingElement::one() + &RingElement::gen(Gen::T);
    let mut phi = Series1::zero(order);
    for k in 0..=order {
        match log.coeff(k).div_exact_univariate(Gen::T, &one_plus_t) {
            Some(q) => phi.set_coeff(k, q),
            None => return Ok(Err(format!("coefficient of z^{k} is not divisible by 1+t"))),
        }
    }
    Ok(Ok((phi, !w0.is_one())))
}

/// `−K_{−t}(−z0, −z1)`, the Kontsevich law conjugated by `z ↦ −z`, `t ↦ −t`.
pub fn conjugate_kontsevich(order: usize) -> Result<FormalGroupLaw> {
    let k = catalog("kontsevich", order)?;
    let minus_t = RingElement::gen(Gen::T).scale(&crate::ring::rat(-1, 1));
    let f = k
        .series()
        .try_map_coeffs(|c| c.substitute_gen(Gen::T, &minus_t))?;
    let f = Series2::from_fn(order, |i, j| {
        let c = f.get(i, j);
        if (i + j) % 2 == 0 {
            -c
        } else {
            c.clone()
        }
    });
    FormalGroupLaw::new(
        "kontsevich_conjugate",
        f,
        BTreeMap::new(),
        Construction::ClosedForm,
    )
}

/// Runs all convention/target combinations at `order` and the canonical iso.
pub fn adjudicate_kontsevich_iso(order: usize) -> Result<Adjudication> {
    let kontsevich = catalog("kontsevich", order)?;
    let mut rows = Vec::new();
    let mut column_phi = None;
    for conv in CONVENTIONS {
        let change = mobius_coordinate_change(conv, order)?;
        for target in TARGETS {
            let (status, normalized) = match &change {
                Err(why) => (AdjudicationStatus::Undefined(why.clone()), false),
                Ok((phi, normalized)) => {
                    let g = catalog(target, order)?;
                    (
                        AdjudicationStatus::Checked(verify_iso(phi, &kontsevich, &g)?),
                        *normalized,
                    )
                }
            };
            rows.push(AdjudicationRow {
                convention: conv,
                target,
                normalized,
                status,
            });
        }
        if conv == MobiusConvention::Column {
            column_phi = change.ok().map(|(phi, _)| phi);
        }
    }
    let multiplicative = catalog("multiplicative", order)?;
    let canonical = canonical_strict_iso(&kontsevich, &multiplicative)?;
    let canonical_status = verify_iso(&canonical, &kontsevich, &multiplicative)?;
    let conjugate_diagnostic = match column_phi {
        None => AdjudicationStatus::Undefined("column reading undefined".into()),
        Some(phi) => AdjudicationStatus::Checked(verify_iso(
            &phi,
            &conjugate_kontsevich(order)?,
            &catalog("additive", order)?,
        )?),
    };
    Ok(Adjudication {
        order,
        rows,
        canonical,
        canonical_status,
        conjugate_diagnostic,
    })
}
