use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use genusforge_core::check::{first_difference, CheckOutcome};
use genusforge_core::fgl::{self, gaussian_bracket, CATALOG};
use genusforge_core::genus::{self, ManifoldDescriptor, SERIES_CATALOG};
use genusforge_core::ring::{
    bernoulli, factorial, pi, rat, zeta_numeric, zeta_tilde_even, Gen, RingElement,
};
use genusforge_core::series::Series2;
use genusforge_core::symfun::CharacteristicNumbers;

use crate::commands::pretty;
use crate::{CliError, Output, Suite};

type CheckResult = genusforge_core::Result<(bool, Value)>;
type CheckFn = Box<dyn Fn(usize) -> CheckResult + Send + Sync>;

struct Check {
    name: String,
    suite: Suite,
    run: CheckFn,
}

fn check(
    name: impl Into<String>,
    suite: Suite,
    run: impl Fn(usize) -> CheckResult + Send + Sync + 'static,
) -> Check {
    Check {
        name: name.into(),
        suite,
        run: Box::new(run),
    }
}

fn outcome(c: CheckOutcome) -> CheckResult {
    Ok((c.is_pass(), c.to_json()))
}

fn series2_difference(a: &Series2, b: &Series2) -> CheckOutcome {
    first_difference(
        a.iter()
            .map(|((i, j), c)| (i + j, c.clone(), b.get(i, j).clone())),
    )
    .and(first_difference(
        b.iter()
            .map(|((i, j), c)| (i + j, a.get(i, j).clone(), c.clone())),
    ))
}

/// `c_λ[CP^n] = Π_i C(n+1, λ_i)` for `c(T) = (1+x)^{n+1}`.
pub fn cpn_chern_numbers(n: usize) -> CharacteristicNumbers {
    let binom = |a: usize, b: usize| -> BigInt {
        (0..b).fold(BigInt::from(1), |acc, i| {
            acc * BigInt::from(a - i) / BigInt::from(i + 1)
        })
    };
    genus::chern_partitions(n)
        .into_iter()
        .map(|m| {
            let mut v = BigInt::from(1);
            for &(g, e) in m.factors() {
                if let Gen::C(k) = g {
                    v *= binom(n + 1, k as usize).pow(e as u32);
                }
            }
            (m, v.into())
        })
        .collect()
}

fn fgl_checks() -> Vec<Check> {
    let mut out: Vec<Check> = CATALOG
        .iter()
        .map(|&law| {
            check(format!("fgl.axioms.{law}"), Suite::Fgl, move |n| {
                let r = fgl::catalog(law, n)?.check_axioms();
                Ok((r.all_pass(), r.to_json()))
            })
        })
        .collect();
    out.push(check(
        "fgl.kontsevich.germ_vs_closed_form",
        Suite::Fgl,
        |n| {
            let germ = fgl::kontsevich_from_germ(n)?;
            let closed = fgl::kontsevich_closed_form(n);
            let agree = series2_difference(&germ, &closed);
            let expect = &RingElement::one() + &RingElement::gen(Gen::T);
            let z0z1 = closed.get(1, 1) == &expect;
            Ok((
                agree.is_pass() && z0z1,
                json!({ "agreement": agree.to_json(), "z0z1_is_1_plus_t": z0z1 }),
            ))
        },
    ));
    out.push(check(
        "fgl.jacobi.hyperbolic_specialization",
        Suite::Fgl,
        |n| {
            let jacobi = fgl::catalog("jacobi", n)?.specialize(&[
                (Gen::Delta, RingElement::ratio(-1, 8)),
                (Gen::Epsilon, RingElement::zero()),
            ])?;
            let hyperbolic = fgl::catalog("hyperbolic", n)?;
            outcome(series2_difference(jacobi.series(), hyperbolic.series()))
        },
    ));
    out.push(check("fgl.gamma_raw.z0z1_and_grading", Suite::Fgl, |n| {
        let law = fgl::catalog("gamma_raw", n)?;
        let two_gamma = RingElement::gen(Gen::Gamma).scale(&rat(2, 1));
        let z0z1 = law.series().get(1, 1) == &two_gamma;
        let mut bad = Vec::new();
        for ((i, j), c) in law.series().iter() {
            if !c.is_zero() && c.weight() != Some((i + j) as i64 - 1) {
                bad.push(format!("{i},{j}"));
            }
        }
        Ok((
            z0z1 && bad.is_empty(),
            json!({ "z0z1_is_2gamma": z0z1, "inhomogeneous": bad }),
        ))
    }));
    out.push(check("fgl.chi_rescaled", Suite::Fgl, |n| {
        outcome(genus::chi_rescaled_check(n)?)
    }));
    out.push(check("fgl.gaussian_brackets", Suite::Fgl, |n| {
        let mut bad = Vec::new();
        for k in 1..=n as u32 {
            let b = gaussian_bracket(k)?;
            let symmetric = b == b.substitute_gen(Gen::U, &RingElement::gen_pow(Gen::U, -1)?)?;
            let ones = b.num_terms() == k as usize && b.terms().all(|(_, c)| c == &rat(1, 1));
            if !(symmetric && ones) {
                bad.push(k);
            }
        }
        Ok((bad.is_empty(), json!({ "max_n": n, "failing_n": bad })))
    }));
    out
}

fn gamma_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for name in [
        "todd",
        "ahat",
        "gamma_raw",
        "gamma_normalized",
        "kontsevich",
        "chi_rescaled",
    ] {
        out.push(check(
            format!("gamma.mishchenko.{name}"),
            Suite::Gamma,
            move |n| outcome(genus::mishchenko_check(&genus::genus_series(name, n)?, n)?),
        ));
    }
    for m in 1..=3 {
        out.push(check(format!("gamma.msp.m{m}"), Suite::Gamma, move |n| {
            let r = genus::msp_agreement_check(n, m, false)?;
            Ok((r.outcome().is_pass(), r.to_json()))
        }));
    }
    out.push(check(
        "gamma.msp.mutant_fails_at_weight_1",
        Suite::Gamma,
        |n| {
            let r = genus::msp_agreement_check(n, 3, true)?;
            Ok((r.outcome().failing_degree() == Some(1), r.to_json()))
        },
    ));
    out.push(check("gamma.ahat_pontryagin", Suite::Gamma, |n| {
        let r = genus::ahat_pontryagin_identity(n, 3)?;
        Ok((r.is_pass() && r.k1_coefficient == rat(-1, 48), r.to_json()))
    }));
    out.push(check(
        "gamma.conjugation_equivariance",
        Suite::Gamma,
        |_| outcome(genus::conjugation_equivariance_check(4)?),
    ));
    out.push(check("gamma.numeric_validation", Suite::Gamma, |_| {
        let r = genus::numeric_gamma_validation(&rat(1, 4), 20, 1e-10)?;
        Ok((r.is_pass(), r.to_json()))
    }));
    out.push(check("gamma.zeta_tilde_table", Suite::Gamma, |_| {
        let mut rows = Vec::new();
        let mut pass = true;
        for k in 1..=8u32 {
            let zt = zeta_tilde_even(k)?;
            let bern = -bernoulli(2 * k as usize)
                / num_rational::BigRational::from_integer(
                    factorial(2 * k as usize) * BigInt::from(2),
                );
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let numeric = sign * zeta_numeric(2 * k, 25)? / (2.0 * pi()).powi(2 * k as i32);
            let residual = (num_traits::ToPrimitive::to_f64(&zt).expect("finite") - numeric).abs();
            let ok = zt == bern && residual < 1e-12;
            pass &= ok;
            rows.push(json!({ "k": k, "exact": zt == bern, "residual": residual }));
        }
        Ok((pass, json!(rows)))
    }));
    out.push(check("gamma.split", Suite::Gamma, |n| {
        let r = genus::gamma_split_report(n)?;
        Ok((r.derived_identities_hold(), r.to_json()))
    }));
    out.push(check(
        "gamma.power_sum_specialization",
        Suite::Gamma,
        |_| {
            let r = genus::power_sum_map_report(4)?;
            Ok((r.odd_consistent(), r.to_json()))
        },
    ));
    out.push(check("gamma.genus_tables", Suite::Gamma, |_| {
        genus_tables()
    }));
    out
}

fn genus_tables() -> CheckResult {
    let mut failures: Vec<String> = Vec::new();
    let todd = genus::genus_series("todd", 6)?;
    for n in 0..=6 {
        if genus::genus_cpn(&todd, n)? != RingElement::one() {
            failures.push(format!("todd CP{n}"));
        }
    }
    let ahat = genus::genus_series("ahat", 4)?;
    for (n, v) in [(2, rat(-1, 8)), (3, rat(0, 1)), (4, rat(3, 128))] {
        if genus::genus_cpn(&ahat, n)? != RingElement::constant(v) {
            failures.push(format!("ahat CP{n}"));
        }
    }
    for &name in CATALOG.iter().chain(SERIES_CATALOG.iter()) {
        let h = genus::genus_series(name, 4)?;
        for n in 1..=4 {
            let by_chern = genus::genus_of(
                &h,
                &ManifoldDescriptor::Chern {
                    dim: n,
                    numbers: cpn_chern_numbers(n),
                },
            )?;
            if by_chern != genus::genus_cpn(&h, n)? {
                failures.push(format!("chern route {name} CP{n}"));
            }
        }
    }
    let kontsevich = genus::genus_series("kontsevich", 5)?;
    let signs: Vec<Value> = genus::chi_t_sign_report(&kontsevich, 5)?
        .into_iter()
        .map(|row| {
            let expect = if row.n % 2 == 0 { 1 } else { -1 };
            if row.sign != Some(expect) {
                failures.push(format!("chi_t sign CP{}", row.n));
            }
            json!({ "n": row.n, "sign": row.sign })
        })
        .collect();
    Ok((
        failures.is_empty(),
        json!({ "failures": failures, "chi_t_signs": signs }),
    ))
}

fn other_checks() -> Vec<Check> {
    vec![
        check("witten.series", Suite::Witten, |n| {
            let w = genus::witten_series(n, 8)?;
            let r = genus::witten_checks(&w, 3)?;
            Ok((r.is_pass(), r.to_json()))
        }),
        check("universal.gamma", Suite::Universal, |n| {
            let (_, r) = genus::universal_gamma(n, 8)?;
            Ok((r.is_pass(), r.to_json()))
        }),
        check("iso.kontsevich_adjudication", Suite::Iso, |n| {
            let a = fgl::adjudicate_kontsevich_iso(n)?;
            Ok((a.canonical_status.is_pass(), a.to_json()))
        }),
    ]
}

pub fn run(order: usize, suite: Suite) -> Result<Output, CliError> {
    let checks: Vec<Check> = fgl_checks()
        .into_iter()
        .chain(gamma_checks())
        .chain(other_checks())
        .filter(|c| suite == Suite::All || c.suite == suite)
        .collect();
    let mut results: Vec<(String, bool, Value)> = checks
        .par_iter()
        .map(|c| match (c.run)(order) {
            Ok((pass, detail)) => (c.name.clone(), pass, detail),
            Err(e) => (c.name.clone(), false, json!({ "error": e.to_string() })),
        })
        .collect();
    results.sort_by(|a, b| a.0.cmp(&b.0));

    let mut map = Map::new();
    for (name, pass, detail) in &results {
        eprintln!("{} {name}", if *pass { "PASS" } else { "FAIL" });
        map.insert(
            name.clone(),
            json!({ "status": if *pass { "PASS" } else { "FAIL" }, "detail": detail }),
        );
    }
    let first_failure = results.iter().find(|r| !r.1).map(|r| r.0.clone());
    let v = json!({
        "order": order,
        "checks": map,
        "result": if first_failure.is_none() { "PASS" } else { "FAIL" },
        "first_failure": first_failure,
    });
    if let Some(name) = &first_failure {
        eprintln!("first failing check: {name}");
    }
    Ok(Output {
        text: pretty(&v),
        pass: first_failure.is_none(),
    })
}
