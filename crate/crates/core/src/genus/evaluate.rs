use num_rational::BigRational;
use serde_json::{json, Value};

use crate::check::{first_difference, CheckOutcome};
use crate::error::{Error, Result};
use crate::genus::GenusSeries;
use crate::ring::{parse_rational, rat, Gen, Monomial, RingElement};
use crate::symfun::{multiplicative_sequence, CharacteristicNumbers};

/// `χ(CP^n) = [z^n] H(z)^{n+1}`.
pub fn genus_cpn(h: &GenusSeries, n: usize) -> Result<RingElement> {
    if h.order() < n {
        return Err(Error::InsufficientOrder {
            have: h.order(),
            need: n,
        });
    }
    let base = h.h().truncate(n);
    let mut acc = base.clone();
    for _ in 0..n {
        acc = &acc * &base;
    }
    Ok(acc.coeff(n).clone())
}

/// Compares `revert(exp)` with `Σ_{n≥1} χ(CP^{n−1}) v^n / n` through `v^order`.
pub fn mishchenko_check(h: &GenusSeries, order: usize) -> Result<CheckOutcome> {
    if h.order() < order {
        return Err(Error::InsufficientOrder {
            have: h.order(),
            need: order,
        });
    }
    let log = h.logarithm()?;
    let mut pairs = Vec::new();
    for n in 1..=order {
        let chi = genus_cpn(h, n - 1)?;
        pairs.push((n, log.coeff(n).clone(), chi.scale(&rat(1, n as i64))));
    }
    Ok(first_difference(pairs))
}

/// A closed manifold presented either as a product of projective spaces or by
/// its Chern numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ManifoldDescriptor {
    /// `Π_i CP^{n_i}`.
    Projective(Vec<usize>),
    /// Complex dimension and a value for every Chern monomial of that weight.
    Chern {
        dim: usize,
        numbers: CharacteristicNumbers,
    },
}

/// Partitions of `d` as Chern monomials `c_{λ_1} c_{λ_2} …`.
pub fn chern_partitions(d: usize) -> Vec<Monomial> {
    fn go(rest: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if rest == 0 {
            out.push(Monomial::new(cur.iter().map(|&k| (Gen::C(k), 1))).expect("valid"));
            return;
        }
        for k in (1..=rest.min(max)).rev() {
            cur.push(k as u32);
            go(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

pub fn genus_of(h: &GenusSeries, m: &ManifoldDescriptor) -> Result<RingElement> {
    match m {
        ManifoldDescriptor::Projective(dims) => {
            let mut acc = RingElement::one();
            for &n in dims {
                acc = &acc * &genus_cpn(h, n)?;
            }
            Ok(acc)
        }
        ManifoldDescriptor::Chern { dim, numbers } => {
            let required = chern_partitions(*dim);
            for key in numbers.keys() {
                if !required.contains(key) {
                    return Err(Error::InvalidArgument(format!(
                        "{key} is not a Chern monomial of weight {dim}"
                    )));
                }
            }
            if let Some(missing) = required.iter().find(|k| !numbers.contains_key(k)) {
                return Err(Error::IncompleteChernTable(missing.to_string()));
            }
            if *dim == 0 {
                return Ok(RingElement::one());
            }
            let seq = multiplicative_sequence(h.h(), *dim)?;
            seq[dim - 1].evaluate(numbers)
        }
    }
}

/// Parses `"c1^2=9,c2=3"` into Chern numbers.
pub fn parse_chern_table(s: &str) -> Result<CharacteristicNumbers> {
    let mut out = CharacteristicNumbers::new();
    for entry in s.split(',').map(str::trim).filter(|e| !e.is_empty()) {
        let (lhs, rhs) = entry
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("chern entry {entry:?} lacks '='")))?;
        let value: BigRational = parse_rational(rhs.trim())?;
        let mut factors = Vec::new();
        for factor in lhs.split('*').map(str::trim) {
            let (g, e) = match factor.split_once('^') {
                Some((g, e)) => (
                    g,
                    e.parse::<i32>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?,
                ),
                None => (factor, 1),
            };
            let gen: Gen = g.parse()?;
            if !matches!(gen, Gen::C(_)) || e < 1 {
                return Err(Error::Parse(format!(
                    "{factor:?} is not a Chern class power"
                )));
            }
            factors.push((gen, e));
        }
        let key = Monomial::new(factors)?;
        if out.insert(key.clone(), value).is_some() {
            return Err(Error::Parse(format!("duplicate chern entry {key}")));
        }
    }
    Ok(out)
}

/// `{"series":…,"rows":[{"n":…,"value":…}]}` for `n` in `ns`.
pub fn genus_table(h: &GenusSeries, ns: impl IntoIterator<Item = usize>) -> Result<Value> {
    let rows = ns
        .into_iter()
        .map(|n| Ok(json!({"n": n, "value": genus_cpn(h, n)?.to_json()})))
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({"series": h.name(), "rows": rows}))
}

/// Per-`n` comparison of the Kontsevich genus of `CP^n` with the Hodge value
/// `1 + t + … + t^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiTSign {
    pub n: usize,
    pub genus: RingElement,
    pub hodge: RingElement,
    /// `Some(±1)` when `genus = ±hodge`.
    pub sign: Option<i64>,
}

pub fn chi_t_sign_report(kontsevich: &GenusSeries, n_max: usize) -> Result<Vec<ChiTSign>> {
    (0..=n_max)
        .map(|n| {
            let genus = genus_cpn(kontsevich, n)?;
            let mut hodge = RingElement::zero();
            for q in 0..=n {
                hodge += &RingElement::gen_pow(Gen::T, q as i32)?;
            }
            let sign = if genus == hodge {
                Some(1)
            } else if genus == -&hodge {
                Some(-1)
            } else {
                None
            };
            Ok(ChiTSign {
                n,
                genus,
                hodge,
                sign,
            })
        })
        .collect()
}
