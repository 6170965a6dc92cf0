//! Outcome of an identity check.

use serde_json::{json, Value};

use crate::ring::RingElement;

/// `Pass`, or the lowest degree at which an identity fails together with the
/// offending coefficient (usually the difference of the two sides).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    Fail {
        degree: usize,
        coefficient: RingElement,
    },
}

impl CheckOutcome {
    pub fn fail(degree: usize, coefficient: RingElement) -> Self {
        CheckOutcome::Fail {
            degree,
            coefficient,
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Pass)
    }

    pub fn failing_degree(&self) -> Option<usize> {
        match self {
            CheckOutcome::Pass => None,
            CheckOutcome::Fail { degree, .. } => Some(*degree),
        }
    }

    /// Combines two outcomes, keeping the failure of lower degree.
    pub fn and(self, other: CheckOutcome) -> CheckOutcome {
        match (&self, &other) {
            (CheckOutcome::Pass, _) => other,
            (_, CheckOutcome::Pass) => self,
            (CheckOutcome::Fail { degree: a, .. }, CheckOutcome::Fail { degree: b, .. }) => {
                if b < a {
                    other
                } else {
                    self
                }
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CheckOutcome::Pass => json!({ "status": "PASS" }),
            CheckOutcome::Fail {
                degree,
                coefficient,
            } => json!({
                "status": "FAIL",
                "degree": degree,
                "coefficient": coefficient.to_json(),
            }),
        }
    }
}

/// First failure over `(degree, lhs − rhs)` pairs, scanned in the given order.
pub fn first_difference<I>(pairs: I) -> CheckOutcome
where
    I: IntoIterator<Item = (usize, RingElement, RingElement)>,
{
    let mut best: Option<(usize, RingElement)> = None;
    for (d, a, b) in pairs {
        if best.as_ref().is_some_and(|(bd, _)| *bd <= d) {
            continue;
        }
        let diff = &a - &b;
        if !diff.is_zero() {
            best = Some((d, diff));
        }
    }
    match best {
        None => CheckOutcome::Pass,
        Some((degree, coefficient)) => CheckOutcome::Fail {
            degree,
            coefficient,
        },
    }
}
