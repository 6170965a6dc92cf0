//! Canonical JSON encoding of ring elements and rationals.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::ring::{Gen, Monomial, RingElement};

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n).map_err(|_| bad())?;
    let d = BigInt::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub fn rational_string(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl RingElement {
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(m, c)| {
                let exps: Map<String, Value> = m
                    .factors()
                    .iter()
                    .map(|(g, e)| (g.to_string(), json!(e)))
                    .collect();
                json!({
                    "num": c.numer().to_string(),
                    "den": c.denom().to_string(),
                    "exps": exps,
                })
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("ring element JSON: {what}"));
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `terms` array"))?;
        let mut out = RingElement::zero();
        for t in terms {
            let num = t
                .get("num")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("num"))?;
            let den = t
                .get("den")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("den"))?;
            let c = parse_rational(&format!("{num}/{den}"))?;
            let exps = t
                .get("exps")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("exps"))?;
            let mut factors = Vec::with_capacity(exps.len());
            for (k, e) in exps {
                let g = Gen::from_str(k)?;
                let e = e.as_i64().ok_or_else(|| bad("exponent"))?;
                factors.push((g, i32::try_from(e).map_err(|_| bad("exponent range"))?));
            }
            out += &RingElement::term(Monomial::new(factors)?, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encodes_canonically() {
        let x = RingElement::ratio(-3, 2) * RingElement::gen(Gen::Gamma)
            + RingElement::gen(Gen::Zeta(3)) * RingElement::gen_pow(Gen::Ipi2, -3).unwrap();
        let v = x.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"terms":[{"den":"1","exps":{"ipi2":-3,"zeta3":1},"num":"1"},{"den":"2","exps":{"gamma":1},"num":"-3"}]}"#
        );
        assert_eq!(RingElement::from_json(&v).unwrap(), x);
    }

    #[test]
    fn rational_syntax() {
        assert_eq!(parse_rational("-1/8").unwrap(), crate::ring::rat(-1, 8));
        assert_eq!(parse_rational("4/2").unwrap(), crate::ring::rat(2, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert_eq!(rational_string(&crate::ring::rat(6, -4)), "-3/2");
    }
}
