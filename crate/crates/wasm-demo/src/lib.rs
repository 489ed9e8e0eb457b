//! Browser bindings for okcas. The `*_json` functions are plain Rust and
//! return JSON strings; the `#[wasm_bindgen]` exports only convert errors.

use num_traits::ToPrimitive;
use okcas::casimir::{casimir_eig_matrix, casimir_eig_sum, GLWeight};
use okcas::cli::{parse_partition, parse_rational_list};
use okcas::expansion::{expand, top_coefficients};
use okcas::okounkov::{okounkov_poly, OkounkovParams, SpecializationParams};
use okcas::rational::{format_rational, parse_rational, Rational};
use serde_json::{json, Map, Value};
use wasm_bindgen::prelude::*;

fn approx(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn coeff_object<'a, I>(items: I) -> Value
where
    I: IntoIterator<Item = (&'a okcas::Partition, &'a Rational)>,
{
    let map: Map<String, Value> = items
        .into_iter()
        .map(|(k, v)| (k.to_string(), Value::String(format_rational(v))))
        .collect();
    Value::Object(map)
}

pub fn okounkov_json(lambda: &str, r: usize, tau: &str, alpha: &str) -> Result<String, String> {
    let lambda = parse_partition(lambda).map_err(|e| e.to_string())?;
    let params = OkounkovParams::new(
        r,
        parse_rational(tau).map_err(|e| e.to_string())?,
        parse_rational(alpha).map_err(|e| e.to_string())?,
    );
    let poly = okounkov_poly(&lambda, &params).map_err(|e| e.to_string())?;
    Ok(json!({
        "text": poly.to_string(),
        "terms": poly.len(),
        "degree": poly.degree(),
        "zero": poly.is_zero(),
    })
    .to_string())
}

pub fn expand_json(lambda: &str, n: usize, r: usize, s: &str) -> Result<String, String> {
    let lambda = parse_partition(lambda).map_err(|e| e.to_string())?;
    let s = parse_rational(s).map_err(|e| e.to_string())?;
    let sp = SpecializationParams::new(n, r, s).map_err(|e| e.to_string())?;
    let res = expand(&lambda, &sp).map_err(|e| e.to_string())?;
    let expected = top_coefficients(&lambda);
    let top = res.top();
    Ok(json!({
        "coeffs": coeff_object(&res.coeffs),
        "top": coeff_object(&top),
        "expected_top": coeff_object(&expected),
        "theorem_holds": top == expected,
        "residual_zero": res.residual_zero,
    })
    .to_string())
}

/// Samples every b_μ(s) on `steps + 1` evenly spaced rational points of
/// `[lo, hi]` for plotting.
pub fn coefficient_curves_json(
    lambda: &str,
    n: usize,
    r: usize,
    lo: &str,
    hi: &str,
    steps: u32,
) -> Result<String, String> {
    let lambda = parse_partition(lambda).map_err(|e| e.to_string())?;
    let lo = parse_rational(lo).map_err(|e| e.to_string())?;
    let hi = parse_rational(hi).map_err(|e| e.to_string())?;
    let steps = steps.max(1);
    let width = (&hi - &lo) / Rational::from_integer(steps.into());
    let mut xs = Vec::new();
    let mut series: Map<String, Value> = Map::new();
    let mut rows = Vec::new();
    for k in 0..=steps {
        let s = &lo + &width * Rational::from_integer(k.into());
        let sp = SpecializationParams::new(n, r, s.clone()).map_err(|e| e.to_string())?;
        rows.push(expand(&lambda, &sp).map_err(|e| e.to_string())?);
        xs.push(approx(&s));
    }
    let keys: std::collections::BTreeSet<_> = rows
        .iter()
        .flat_map(|res| res.coeffs.keys().cloned())
        .collect();
    for key in keys {
        let ys: Vec<f64> = rows.iter().map(|res| approx(&res.get(&key))).collect();
        series.insert(key.to_string(), json!(ys));
    }
    Ok(json!({ "s": xs, "series": series }).to_string())
}

pub fn casimir_json(weight: &str, kmax: u32) -> Result<String, String> {
    let weight = GLWeight::new(parse_rational_list(weight).map_err(|e| e.to_string())?);
    let rows: Vec<Value> = (0..=kmax)
        .map(|k| {
            let m = casimir_eig_matrix(&weight, k);
            let s = casimir_eig_sum(&weight, k);
            json!({
                "k": k,
                "matrix": format_rational(&m),
                "scheunert": s.as_ref().map(format_rational).unwrap_or_else(|e| e.to_string()),
                "agree": s.map(|v| v == m).unwrap_or(false),
            })
        })
        .collect();
    Ok(Value::Array(rows).to_string())
}

#[wasm_bindgen]
pub fn okounkov(lambda: &str, r: usize, tau: &str, alpha: &str) -> Result<String, JsError> {
    okounkov_json(lambda, r, tau, alpha).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = expand)]
pub fn expand_js(lambda: &str, n: usize, r: usize, s: &str) -> Result<String, JsError> {
    expand_json(lambda, n, r, s).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = coefficientCurves)]
pub fn coefficient_curves(
    lambda: &str,
    n: usize,
    r: usize,
    lo: &str,
    hi: &str,
    steps: u32,
) -> Result<String, JsError> {
    coefficient_curves_json(lambda, n, r, lo, hi, steps).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn casimir(weight: &str, kmax: u32) -> Result<String, JsError> {
    casimir_json(weight, kmax).map_err(|e| JsError::new(&e))
}
