//! JSON renderings of verdicts and reports.

use fermiso_core::irreducibility::ReducibilityVerdict;
use fermiso_core::isospectral::{IsoVerdict, RigidityReport, Witness};
use num_complex::Complex64;
use serde_json::{json, Map, Value};

/// A float rounded to 12 significant digits.
pub fn number(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float");
    json!(if r == 0.0 { 0.0 } else { r })
}

pub fn complex(c: Complex64) -> Value {
    json!({ "re": number(c.re), "im": number(c.im) })
}

fn witness_json(w: &Witness, dim: usize) -> Value {
    match w {
        Witness::Monomial(d) => json!({
            "type": "monomial",
            "z": &d.exponent.z[..dim],
            "lambda": d.exponent.lambda,
            "left": d.left.to_string(),
            "right": d.right.to_string(),
        }),
        Witness::Eigenvalue { index, left, right } => json!({
            "type": "eigenvalue",
            "index": index,
            "left": complex(*left),
            "right": complex(*right),
        }),
    }
}

pub fn verdict_json(v: &IsoVerdict, dim: usize) -> Value {
    let mut out = Map::new();
    out.insert("kind".into(), json!(v.kind.as_str()));
    out.insert("result".into(), json!(v.equal));
    if let Some(l) = &v.lambda0 {
        out.insert("lambda0".into(), json!(l.to_string()));
    }
    if let Some(w) = &v.witness {
        out.insert("witness".into(), witness_json(w, dim));
    }
    Value::Object(out)
}

pub fn reducibility_json(r: &ReducibilityVerdict) -> Value {
    let mut out = Map::new();
    out.insert("lambda0".into(), json!(r.lambda0.to_string()));
    out.insert("verdict".into(), json!(r.verdict.as_str()));
    out.insert("reason".into(), json!(r.reason.as_str()));
    if let Some(d) = &r.witness {
        out.insert(
            "witness".into(),
            json!({
                "z": d.exponent.z,
                "lambda": d.exponent.lambda,
                "left": d.left.to_string(),
                "right": d.right.to_string(),
            }),
        );
    }
    Value::Object(out)
}

pub fn rigidity_json(r: &RigidityReport) -> Value {
    let dim = r.periods.len();
    let mut out = Map::new();
    out.insert("status".into(), json!(r.status.as_str()));
    out.insert("periods".into(), json!(r.periods));
    out.insert("lambda0".into(), json!(r.lambda0.to_string()));
    out.insert("fermi".into(), verdict_json(&r.fermi, dim));
    if let Some(c) = &r.shift {
        out.insert("shift".into(), json!(c.to_string()));
    }
    let components: Vec<Value> = [("X1", "Y1-c", &r.first), ("X2", "Y2+c", &r.second)]
        .iter()
        .filter_map(|(a, b, v)| {
            v.as_ref().map(|v| {
                json!({
                    "left": a,
                    "right": b,
                    "verdict": verdict_json(v, 1),
                })
            })
        })
        .collect();
    if !components.is_empty() {
        out.insert("components".into(), json!(components));
    }
    let digests: Map<String, Value> = r
        .digests
        .iter()
        .map(|(k, v)| (k.clone(), json!(v)))
        .collect();
    out.insert("digests".into(), Value::Object(digests));
    Value::Object(out)
}

/// Pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
