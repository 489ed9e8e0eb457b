use okcas_wasm::{casimir_json, coefficient_curves_json, expand_json, okounkov_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn okounkov_single_box() {
    let v = parse(&okounkov_json("1", 1, "1", "2").unwrap());
    assert_eq!(v["text"], "x1^2 - 4");
    assert_eq!(v["degree"], 2);
    assert!(okounkov_json("1,2", 1, "1", "0").is_err());
}

#[test]
fn expansion_reports_theorem() {
    let v = parse(&expand_json("2,1", 5, 2, "1/2").unwrap());
    assert_eq!(v["theorem_holds"], true);
    assert_eq!(v["top"], v["expected_top"]);
    assert_eq!(v["expected_top"]["[3]"], "-1/6");
    assert!(expand_json("1", 3, 2, "0").is_err());
}

#[test]
fn curves_follow_rank_one_formula() {
    let v = parse(&coefficient_curves_json("1", 2, 1, "-1", "1", 4).unwrap());
    let s: Vec<f64> = serde_json::from_value(v["s"].clone()).unwrap();
    let b0: Vec<f64> = serde_json::from_value(v["series"]["[]"].clone()).unwrap();
    assert_eq!(s, vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
    for (x, y) in s.iter().zip(b0) {
        assert_eq!(y, x - x * x);
    }
}

#[test]
fn casimir_table() {
    let v = parse(&casimir_json("1,0", 2).unwrap());
    assert_eq!(v[2]["matrix"], "2");
    assert_eq!(v[2]["scheunert"], "2");
    assert_eq!(v[2]["agree"], true);
    let v = parse(&casimir_json("0,1", 1).unwrap());
    assert_eq!(v[1]["agree"], false);
}
