use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn genusforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genusforge"))
        .args(args)
        .env_remove("GENUSFORGE_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn rational(v: &Value) -> String {
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 1, "{v}");
    assert!(terms[0]["exps"].as_object().unwrap().is_empty(), "{v}");
    format!(
        "{}/{}",
        terms[0]["num"].as_str().unwrap(),
        terms[0]["den"].as_str().unwrap()
    )
}

#[test]
fn list_names_the_catalog() {
    let out = genusforge(&["fgl", "list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().any(|l| l == "kontsevich"));
}

#[test]
fn multiplicative_series_at_order_three() {
    let out = genusforge(&[
        "fgl",
        "series",
        "--law",
        "multiplicative",
        "--order",
        "3",
        "--json",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let coeffs = v["F"]["coeffs"].as_object().unwrap();
    let nonzero: Vec<_> = coeffs
        .iter()
        .filter(|(_, c)| !c["terms"].as_array().unwrap().is_empty())
        .collect();
    assert_eq!(nonzero.len(), 3);
    for key in ["1,0", "0,1", "1,1"] {
        assert_eq!(rational(&coeffs[key]), "1/1");
    }
}

#[test]
fn jacobi_check_passes() {
    let out = genusforge(&["fgl", "check", "--law", "jacobi", "--order", "10", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    for axiom in ["unit", "commutativity", "associativity"] {
        assert_eq!(v["axioms"][axiom], "PASS");
    }
}

#[test]
fn broken_demo_fails_associativity_at_four() {
    let out = genusforge(&[
        "fgl",
        "check",
        "--law",
        "broken-demo",
        "--order",
        "6",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["axioms"]["associativity"]["degree"], 4);
    assert_eq!(v["axioms"]["commutativity"], "PASS");
}

#[test]
fn params_specialize_jacobi_to_hyperbolic() {
    let j = genusforge(&[
        "fgl",
        "series",
        "--law",
        "jacobi",
        "--order",
        "6",
        "--param",
        "delta=-1/8",
        "--param",
        "epsilon=0",
        "--json",
    ]);
    let h = genusforge(&[
        "fgl",
        "series",
        "--law",
        "hyperbolic",
        "--order",
        "6",
        "--json",
    ]);
    assert!(j.status.success() && h.status.success());
    assert_eq!(stdout_json(&j)["F"], stdout_json(&h)["F"]);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        genusforge(&["fgl", "check", "--law", "nope"]).status.code(),
        Some(2)
    );
    assert_eq!(
        genusforge(&["fgl", "check", "--law", "additive", "--bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        genusforge(&["verify", "--order", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        genusforge(&["genus", "chern", "--series", "todd", "--chern", "c1^2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        genusforge(&["genus", "chern", "--series", "todd", "--chern", "c1^2=9"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn genus_values() {
    let out = genusforge(&["genus", "cpn", "--series", "ahat", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(rational(&stdout_json(&out)["value"]), "-1/8");

    let out = genusforge(&["genus", "cpn", "--series", "todd", "--max-n", "6"]);
    let rows = stdout_json(&out)["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| rational(&r["value"]) == "1/1"));

    let out = genusforge(&["genus", "cpn", "--series", "gamma_raw", "--n", "1"]);
    let term = &stdout_json(&out)["value"]["terms"][0];
    assert_eq!(term["num"], "-2");
    assert_eq!(term["exps"]["gamma"], 1);

    let out = genusforge(&[
        "genus",
        "chern",
        "--series",
        "todd",
        "--chern",
        "c1^2=9,c2=3",
    ]);
    assert_eq!(rational(&stdout_json(&out)["value"]), "1/1");
}

#[test]
fn gamma_presentation_flag() {
    let out = genusforge(&[
        "genus",
        "table",
        "--series",
        "gamma",
        "--presentation",
        "normalized",
        "--max-n",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["series"], "gamma_normalized");
}

#[test]
fn iso_reports_verification() {
    let out = genusforge(&[
        "fgl",
        "iso",
        "--from",
        "kontsevich",
        "--to",
        "multiplicative",
        "--order",
        "6",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["result"]["status"], "PASS");
}

#[test]
fn verify_suites() {
    let out = genusforge(&["verify", "--suite", "gamma", "--order", "10"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );

    let out = genusforge(&["verify", "--suite", "iso"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let table = &v["checks"]["iso.kontsevich_adjudication"]["detail"];
    assert_eq!(table["mobius"].as_array().unwrap().len(), 12);
    assert_eq!(table["canonical"]["result"]["status"], "PASS");
}

#[test]
fn env_order_sets_the_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_genusforge"))
        .args(["fgl", "series", "--law", "additive", "--json"])
        .env("GENUSFORGE_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(stdout_json(&out)["order"], 4);
    let out = Command::new(env!("CARGO_BIN_EXE_genusforge"))
        .args(["verify", "--suite", "witten"])
        .env("GENUSFORGE_ORDER", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn witten_command() {
    let out = genusforge(&["witten", "--x-order", "6", "--q-order", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["series"]["rows"][0]["q"][1], "2");
}

#[test]
fn series_utilities_round_trip() {
    let input = r#"{"order":4,"coeffs":[
        {"terms":[]},
        {"terms":[{"num":"1","den":"1","exps":{}}]},
        {"terms":[]},{"terms":[]},{"terms":[]}]}"#;
    let run = |op: &str, stdin: &[u8]| {
        let mut child = Command::new(env!("CARGO_BIN_EXE_genusforge"))
            .args(["series", op])
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(stdin).unwrap();
        child.wait_with_output().unwrap()
    };
    let e = run("exp", input.as_bytes());
    assert!(e.status.success());
    let v = stdout_json(&e);
    // e^z: 1, 1, 1/2, 1/6, 1/24
    assert_eq!(rational(&v["coeffs"][3]), "1/6");
    let l = run("log", &e.stdout);
    assert_eq!(
        stdout_json(&l),
        serde_json::from_str::<Value>(input).unwrap()
    );
    let r = run("revert", input.as_bytes());
    assert_eq!(
        stdout_json(&r),
        serde_json::from_str::<Value>(input).unwrap()
    );
    assert_eq!(run("log", input.as_bytes()).status.code(), Some(2));
}
