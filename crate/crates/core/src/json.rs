//! Canonical JSON: sorted keys, floats rounded to 12 significant digits,
//! exact coefficients as integers (or strings when they overflow `i64`).

use serde::Serialize;
use serde_json::{json, Map, Number, Value};

use crate::representation::{BivariatePoly, LaurentMatrix};
use crate::format::round_sig;
use crate::laurent::LaurentPoly;
use crate::scalar::Coefficient;

pub const SIG_DIGITS: usize = 12;

fn coefficient_value<C: Coefficient>(c: &C) -> Value {
    let text = c.to_string();
    match c.to_i64() {
        Some(v) if v.to_string() == text => Value::from(v),
        _ => Value::String(text),
    }
}

/// `{"exp": coeff, ..}` keyed by the exponent as a string.
pub fn laurent_value<C: Coefficient>(p: &LaurentPoly<C>) -> Value {
    let mut map = Map::new();
    for (e, c) in p.terms() {
        map.insert(e.to_string(), coefficient_value(c));
    }
    Value::Object(map)
}

pub fn laurent_matrix_value<C: Coefficient>(m: &LaurentMatrix<C>) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(laurent_value).collect()))
        .collect();
    json!({ "dim": m.dim(), "entries": entries })
}

/// `x_coeffs[a]` is the Laurent coefficient of `x^a`.
pub fn bivariate_value<C: Coefficient>(p: &BivariatePoly<C>) -> Value {
    json!({
        "degree_x": p.degree_x(),
        "x_coeffs": p.x_coeffs().iter().map(laurent_value).collect::<Vec<_>>(),
        "text": p.to_string(),
    })
}

/// Rounds every float in `v` to [`SIG_DIGITS`] significant digits.
pub fn canonicalize(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().unwrap_or(f64::NAN), SIG_DIGITS);
            Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(canonicalize).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, canonicalize(v))).collect()),
        other => other,
    }
}

pub fn to_canonical_value<S: Serialize>(s: &S) -> serde_json::Result<Value> {
    serde_json::to_value(s).map(canonicalize)
}

/// Pretty, deterministic text ending in a newline.
pub fn to_canonical_string<S: Serialize>(s: &S) -> serde_json::Result<String> {
    let v = to_canonical_value(s)?;
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}
