use std::io::Read;
use std::path::Path;

use genusforge_core::fgl::{self, canonical_strict_iso, verify_iso, FormalGroupLaw, CATALOG};
use genusforge_core::genus::{self, GenusSeries, ManifoldDescriptor};
use genusforge_core::ring::{parse_rational, Gen, RingElement};
use genusforge_core::series::Series1;
use genusforge_core::symfun::Presentation;
use serde_json::{json, Value};

use crate::{CliError, Output};

pub fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn json_output(v: Value, pass: bool) -> Output {
    Output {
        text: pretty(&v),
        pass,
    }
}

fn parse_params(params: &[String]) -> Result<Vec<(Gen, RingElement)>, CliError> {
    params
        .iter()
        .map(|p| {
            let (name, value) = p
                .split_once('=')
                .ok_or_else(|| CliError::usage(format!("--param {p:?} must be NAME=P/Q")))?;
            let gen: Gen = name.trim().parse()?;
            Ok((gen, RingElement::constant(parse_rational(value.trim())?)))
        })
        .collect()
}

fn load_law(name: &str, order: usize, params: &[String]) -> Result<FormalGroupLaw, CliError> {
    let law = fgl::lookup(name, order)?;
    let values = parse_params(params)?;
    if values.is_empty() {
        Ok(law)
    } else {
        Ok(law.specialize(&values)?)
    }
}

fn monomial(i: usize, j: usize) -> String {
    let part = |v: &str, e: usize| match e {
        0 => None,
        1 => Some(v.to_string()),
        e => Some(format!("{v}^{e}")),
    };
    [part("z0", i), part("z1", j)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

pub fn fgl_list(json: bool) -> Result<Output, CliError> {
    let text = if json {
        pretty(&json!({ "laws": CATALOG }))
    } else {
        CATALOG.join("\n")
    };
    Ok(Output { text, pass: true })
}

pub fn fgl_series(
    name: &str,
    order: usize,
    params: &[String],
    json: bool,
) -> Result<Output, CliError> {
    let law = load_law(name, order, params)?;
    if json {
        return Ok(json_output(law.to_json(), true));
    }
    let mut lines = vec![format!(
        "{} (order {}, {})",
        law.name(),
        law.order(),
        law.construction()
    )];
    let mut terms: Vec<_> = law.series().iter().filter(|(_, c)| !c.is_zero()).collect();
    terms.sort_by_key(|&((i, j), _)| (i + j, std::cmp::Reverse(i)));
    for ((i, j), c) in terms {
        lines.push(format!("{}: {}", monomial(i, j), c));
    }
    Ok(Output {
        text: lines.join("\n"),
        pass: true,
    })
}

pub fn fgl_check(
    name: &str,
    order: usize,
    params: &[String],
    json: bool,
) -> Result<Output, CliError> {
    let law = load_law(name, order, params)?;
    let report = law.check_axioms();
    let pass = report.all_pass();
    if json {
        let v = json!({ "law": law.name(), "order": law.order(), "axioms": report.to_json() });
        return Ok(json_output(v, pass));
    }
    let line = |axiom: &str, c: &genusforge_core::check::CheckOutcome| match c {
        genusforge_core::check::CheckOutcome::Pass => format!("{axiom}: PASS"),
        genusforge_core::check::CheckOutcome::Fail {
            degree,
            coefficient,
        } => {
            format!("{axiom}: FAIL at degree {degree} (difference {coefficient})")
        }
    };
    let text = [
        format!("{} (order {})", law.name(), law.order()),
        line("unit", &report.unit),
        line("commutativity", &report.commutativity),
        line("associativity", &report.associativity),
    ]
    .join("\n");
    Ok(Output { text, pass })
}

pub fn fgl_iso(from: &str, to: &str, order: usize, json: bool) -> Result<Output, CliError> {
    let f = fgl::lookup(from, order)?;
    let g = fgl::lookup(to, order)?;
    let phi = canonical_strict_iso(&f, &g)?;
    let status = verify_iso(&phi, &f, &g)?;
    let pass = status.is_pass();
    if json {
        let v = json!({ "from": from, "to": to, "order": order, "phi": phi.to_json(), "result": status.to_json() });
        return Ok(json_output(v, pass));
    }
    let text = format!(
        "phi = {phi}\nverify: {}",
        if pass {
            "PASS".to_string()
        } else {
            format!("FAIL at degree {}", status.failing_degree().unwrap_or(0))
        }
    );
    Ok(Output { text, pass })
}

fn load_series(name: &str, presentation: &str, order: usize) -> Result<GenusSeries, CliError> {
    let pres: Presentation = presentation.parse()?;
    let order = order.max(2);
    if name == "gamma" {
        return Ok(genus::gamma_series(order, pres)?);
    }
    match genus::genus_series(name, order) {
        Err(genusforge_core::Error::UnknownLaw(_)) => {
            Err(CliError::usage(format!("unknown genus series `{name}`")))
        }
        other => Ok(other?),
    }
}

pub fn genus_cpn(
    name: &str,
    presentation: &str,
    n: Option<usize>,
    max_n: Option<usize>,
) -> Result<Output, CliError> {
    match (n, max_n) {
        (Some(n), _) => {
            let h = load_series(name, presentation, n)?;
            let value = genus::genus_cpn(&h, n)?;
            Ok(json_output(
                json!({ "series": h.name(), "n": n, "value": value.to_json() }),
                true,
            ))
        }
        (None, Some(max_n)) => {
            let h = load_series(name, presentation, max_n)?;
            Ok(json_output(genus::genus_table(&h, 1..=max_n)?, true))
        }
        (None, None) => Err(CliError::usage("genus cpn needs --n or --max-n")),
    }
}

pub fn genus_chern(name: &str, presentation: &str, table: &str) -> Result<Output, CliError> {
    let numbers = genus::parse_chern_table(table)?;
    let weights: std::collections::BTreeSet<i64> = numbers.keys().map(|m| m.weight()).collect();
    let dim = match weights.len() {
        1 => *weights.iter().next().expect("one weight") as usize,
        0 => return Err(CliError::usage("empty chern table")),
        _ => return Err(CliError::usage("chern monomials have different weights")),
    };
    let h = load_series(name, presentation, dim)?;
    let value = genus::genus_of(&h, &ManifoldDescriptor::Chern { dim, numbers })?;
    Ok(json_output(
        json!({ "series": h.name(), "dim": dim, "chern": table, "value": value.to_json() }),
        true,
    ))
}

pub fn genus_table(name: &str, presentation: &str, max_n: usize) -> Result<Output, CliError> {
    let h = load_series(name, presentation, max_n)?;
    Ok(json_output(genus::genus_table(&h, 0..=max_n)?, true))
}

pub fn witten(x_order: usize, q_order: usize) -> Result<Output, CliError> {
    let w = genus::witten_series(x_order, q_order)?;
    let report = genus::witten_checks(&w, 3)?;
    let pass = report.is_pass();
    Ok(json_output(
        json!({ "series": w.to_json(), "checks": report.to_json() }),
        pass,
    ))
}

#[derive(Clone, Copy)]
pub enum RawOp {
    Exp,
    Log,
    Revert,
}

pub fn series_op(op: RawOp, input: Option<&Path>) -> Result<Output, CliError> {
    let mut text = String::new();
    match input {
        Some(p) => {
            text = std::fs::read_to_string(p)
                .map_err(|e| CliError::usage(format!("{}: {e}", p.display())))?
        }
        None => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::usage(e.to_string()))?;
        }
    }
    let v: Value =
        serde_json::from_str(&text).map_err(|e| CliError::usage(format!("input JSON: {e}")))?;
    let f = Series1::from_json(&v)?;
    let out = match op {
        RawOp::Exp => f.exp_series()?,
        RawOp::Log => f.log_series()?,
        RawOp::Revert => f.revert()?,
    };
    Ok(json_output(out.to_json(), true))
}
