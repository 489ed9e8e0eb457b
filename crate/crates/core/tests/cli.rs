use okcas::cli::run;
use okcas::expansion::ExpansionResult;
use okcas::poly::MPoly;
use serde_json::Value;

fn okcas(args: &[&str]) -> okcas::cli::CliOutput {
    run(std::iter::once("okcas").chain(args.iter().copied()))
}

#[test]
fn expand_worked_example_json() {
    let out = okcas(&[
        "expand", "--lambda", "1", "--n", "2", "--r", "1", "--s", "1/2", "--json",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!({"[1]": "1/2", "[]": "1/4"}));
    assert_eq!(v["residual_zero"], Value::Bool(true));
    let parsed: ExpansionResult = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(parsed.to_json(), out.stdout.trim_end());
}

#[test]
fn expand_text() {
    let out = okcas(&[
        "expand", "--lambda", "1", "--n", "2", "--r", "1", "--s", "2",
    ]);
    assert_eq!(out.stdout, "b[1] = 1/2\nb[] = -2\nresidual_zero = true\n");
}

#[test]
fn casimir_both_methods() {
    let out = okcas(&["casimir", "--weight", "1,0", "--k", "2", "--method", "both"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "2\n2\n");
    let out = okcas(&[
        "casimir",
        "--weight",
        "3,1,-2",
        "--k",
        "3",
        "--method",
        "scheunert",
    ]);
    let m = okcas(&["casimir", "--weight", "3,1,-2", "--k", "3"]);
    assert_eq!(out.stdout, m.stdout);
}

#[test]
fn casimir_singular_weight() {
    let out = okcas(&[
        "casimir",
        "--weight",
        "0,1",
        "--k",
        "2",
        "--method",
        "scheunert",
    ]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("singular Scheunert denominator"));
}

#[test]
fn okounkov_outputs() {
    let out = okcas(&[
        "okounkov", "--lambda", "", "--r", "3", "--tau", "1", "--alpha", "0",
    ]);
    assert_eq!(out.stdout, "1\n");
    let out = okcas(&[
        "okounkov", "--lambda", "0", "--r", "3", "--tau", "1", "--alpha", "0",
    ]);
    assert_eq!(out.stdout, "1\n");
    let out = okcas(&[
        "okounkov", "--lambda", "1", "--r", "1", "--tau", "1", "--alpha", "-3/2",
    ]);
    assert_eq!(out.stdout, "x1^2 - 9/4\n");
    let out = okcas(&[
        "okounkov", "--lambda", "1", "--r", "1", "--tau", "1", "--alpha", "-3/2", "--eval", "3/2",
    ]);
    assert_eq!(out.stdout, "0\n");
    let out = okcas(&[
        "okounkov", "--lambda", "2,1", "--r", "2", "--tau", "1", "--alpha", "1/2", "--json",
    ]);
    let poly = MPoly::from_json(2, &serde_json::from_str(&out.stdout).unwrap()).unwrap();
    let text = okcas(&[
        "okounkov", "--lambda", "2,1", "--r", "2", "--tau", "1", "--alpha", "1/2",
    ]);
    assert_eq!(format!("{poly}\n"), text.stdout);
}

#[test]
fn okounkov_warns_on_long_partition() {
    let out = okcas(&[
        "okounkov", "--lambda", "1,1,1", "--r", "2", "--tau", "1", "--alpha", "0",
    ]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "0\n");
    assert!(out.stderr.starts_with("warning:"));
}

#[test]
fn restricted_and_ylambda() {
    let out = okcas(&["restricted", "--k", "2", "--n", "2", "--r", "1"]);
    assert_eq!(out.stdout, "2*x1^2 + 2*x1\n");
    let out = okcas(&["restricted", "--k", "2", "--n", "2", "--r", "1", "--json"]);
    assert_eq!(
        out.stdout.trim(),
        r#"[{"coeff":"2","exps":[2]},{"coeff":"2","exps":[1]}]"#
    );
    let out = okcas(&["ylambda", "--lambda", "2,1"]);
    assert_eq!(out.stdout, "-64/3\n");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec![
            "expand", "--lambda", "1,2", "--n", "4", "--r", "2", "--s", "0",
        ],
        vec![
            "expand", "--lambda", "1", "--n", "3", "--r", "2", "--s", "0",
        ],
        vec![
            "expand", "--lambda", "1,1", "--n", "4", "--r", "1", "--s", "0",
        ],
        vec![
            "expand", "--lambda", "1", "--n", "2", "--r", "1", "--s", "1/0",
        ],
        vec!["restricted", "--k", "-1", "--n", "2", "--r", "1"],
        vec![
            "okounkov", "--lambda", "1", "--r", "2", "--tau", "1", "--alpha", "0", "--eval", "1",
        ],
        vec!["frobnicate"],
        vec!["casimir", "--weight", "1,0", "--k", "2", "--bogus"],
    ] {
        let out = okcas(&args);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stderr);
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_suites_pass() {
    let out = okcas(&[
        "verify",
        "--suite",
        "all",
        "--max-weight",
        "2",
        "--max-rank",
        "2",
    ]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.lines().all(|l| !l.contains("FAIL")));
    assert!(out.stdout.ends_with("checks passed\n"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "expand", "--lambda", "2,1", "--n", "5", "--r", "2", "--s", "-1/3", "--json",
    ];
    let first = okcas(&args);
    for _ in 0..5 {
        assert_eq!(okcas(&args), first);
    }
}
