//! Potential and polynomial documents.
//!
//! Potentials: `{"periods": [q1, q2], "values": [...]}` with values
//! row-major (last coordinate fastest), or
//! `{"separable": {"components": [{"period": q, "values": [...]}, ...]}}`.
//! Values are scalar strings (`"p/q"`, `"a/b+c/d i"`, decimals) or JSON
//! numbers.
//!
//! Polynomials: `{"dimension": d, "monomials": [{"z": [...], "lambda": m,
//! "re": "p/q", "im": "p/q"}, ...]}` in canonical exponent order.

use fermiso_core::{make_separable, Exponent, GaussRational, LaurentPoly, Potential, Scalar, SeparablePotential};
use serde_json::{json, Map, Value};

use crate::CliError;

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str, ctx: &str) -> Result<&'a Value, CliError> {
    obj.get(name)
        .ok_or_else(|| parse_err(format!("{ctx}: missing field `{name}`")))
}

fn only_fields(obj: &Map<String, Value>, allowed: &[&str], ctx: &str) -> Result<(), CliError> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(parse_err(format!("{ctx}: unknown field `{k}`"))),
        None => Ok(()),
    }
}

fn as_object<'a>(v: &'a Value, ctx: &str) -> Result<&'a Map<String, Value>, CliError> {
    v.as_object()
        .ok_or_else(|| parse_err(format!("{ctx}: expected an object")))
}

fn as_usize(v: &Value, ctx: &str) -> Result<usize, CliError> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| parse_err(format!("{ctx}: expected a non-negative integer")))
}

fn as_i32(v: &Value, ctx: &str) -> Result<i32, CliError> {
    v.as_i64()
        .and_then(|n| i32::try_from(n).ok())
        .ok_or_else(|| parse_err(format!("{ctx}: expected an integer")))
}

fn scalar(v: &Value, ctx: &str) -> Result<Scalar, CliError> {
    match v {
        Value::String(s) => s
            .parse()
            .map_err(|e| parse_err(format!("{ctx}: {e}"))),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Scalar::integer(i)),
            None => Ok(Scalar::float(n.as_f64().unwrap_or(f64::NAN), 0.0)),
        },
        _ => Err(parse_err(format!("{ctx}: expected a scalar string or number"))),
    }
}

fn values(v: &Value, ctx: &str) -> Result<Vec<Scalar>, CliError> {
    let arr = v
        .as_array()
        .ok_or_else(|| parse_err(format!("{ctx}: expected an array")))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| scalar(x, &format!("{ctx}[{i}]")))
        .collect()
}

fn potential(periods: Vec<usize>, vals: Vec<Scalar>, ctx: &str) -> Result<Potential, CliError> {
    let expected: usize = periods.iter().product();
    if periods.contains(&0) {
        return Err(parse_err(format!("{ctx}.periods: periods must be positive")));
    }
    if vals.len() != expected {
        return Err(parse_err(format!(
            "{ctx}.values: expected {expected} entries, found {}",
            vals.len()
        )));
    }
    Potential::new(periods, vals).map_err(|e| parse_err(format!("{ctx}.values: {e}")))
}

/// A parsed potential document.
#[derive(Clone, Debug)]
pub enum PotentialInput {
    Plain(Potential),
    Separable(SeparablePotential),
}

impl PotentialInput {
    pub fn potential(&self) -> &Potential {
        match self {
            PotentialInput::Plain(v) => v,
            PotentialInput::Separable(s) => s.combined(),
        }
    }

    /// Separable form, splitting a two-dimensional potential if needed.
    pub fn separable(&self) -> Result<SeparablePotential, CliError> {
        match self {
            PotentialInput::Separable(s) => Ok(s.clone()),
            PotentialInput::Plain(v) => Ok(v.split_separable()?),
        }
    }
}

pub fn parse_potential(text: &str) -> Result<PotentialInput, CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
    let obj = as_object(&doc, "potential")?;
    if let Some(sep) = obj.get("separable") {
        only_fields(obj, &["separable"], "potential")?;
        let sep = as_object(sep, "separable")?;
        only_fields(sep, &["components"], "separable")?;
        let comps = field(sep, "components", "separable")?
            .as_array()
            .ok_or_else(|| parse_err("separable.components: expected an array"))?;
        let parts = comps
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let ctx = format!("separable.components[{i}]");
                let c = as_object(c, &ctx)?;
                only_fields(c, &["period", "values"], &ctx)?;
                let q = as_usize(field(c, "period", &ctx)?, &format!("{ctx}.period"))?;
                let vals = values(field(c, "values", &ctx)?, &format!("{ctx}.values"))?;
                potential(vec![q], vals, &ctx)
            })
            .collect::<Result<Vec<_>, _>>()?;
        return match parts.len() {
            0 => Err(parse_err("separable.components: expected at least one component")),
            1 => Ok(PotentialInput::Plain(parts.into_iter().next().expect("one part"))),
            2 => {
                let mut it = parts.into_iter();
                let (a, b) = (it.next().expect("two"), it.next().expect("two"));
                Ok(PotentialInput::Separable(SeparablePotential::new(a, b)?))
            }
            _ => Ok(PotentialInput::Plain(make_separable(&parts)?)),
        };
    }
    only_fields(obj, &["periods", "values"], "potential")?;
    let periods = field(obj, "periods", "potential")?
        .as_array()
        .ok_or_else(|| parse_err("periods: expected an array"))?
        .iter()
        .enumerate()
        .map(|(i, q)| as_usize(q, &format!("periods[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    if periods.is_empty() {
        return Err(parse_err("periods: expected at least one period"));
    }
    let vals = values(field(obj, "values", "potential")?, "values")?;
    Ok(PotentialInput::Plain(potential(periods, vals, "potential")?))
}

pub fn potential_to_json(v: &Potential) -> Value {
    json!({
        "periods": v.periods(),
        "values": v.values().iter().map(|s| s.to_canonical()).collect::<Vec<_>>(),
    })
}

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let monomials: Vec<Value> = p
        .terms()
        .map(|(e, c)| {
            json!({
                "z": &e.z[..p.dim()],
                "lambda": e.lambda,
                "re": c.re.to_string(),
                "im": c.im.to_string(),
            })
        })
        .collect();
    json!({ "dimension": p.dim(), "monomials": monomials })
}

pub fn parse_poly(text: &str) -> Result<LaurentPoly, CliError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
    let obj = as_object(&doc, "polynomial")?;
    only_fields(obj, &["dimension", "monomials"], "polynomial")?;
    let dim = as_usize(field(obj, "dimension", "polynomial")?, "dimension")?;
    if !(1..=fermiso_core::laurent::MAX_DIM).contains(&dim) {
        return Err(parse_err(format!("dimension: unsupported value {dim}")));
    }
    let monos = field(obj, "monomials", "polynomial")?
        .as_array()
        .ok_or_else(|| parse_err("monomials: expected an array"))?;
    let mut p = LaurentPoly::zero(dim);
    let mut last: Option<Exponent> = None;
    for (i, m) in monos.iter().enumerate() {
        let ctx = format!("monomials[{i}]");
        let m = as_object(m, &ctx)?;
        only_fields(m, &["z", "lambda", "re", "im"], &ctx)?;
        let z = field(m, "z", &ctx)?
            .as_array()
            .ok_or_else(|| parse_err(format!("{ctx}.z: expected an array")))?
            .iter()
            .map(|e| as_i32(e, &format!("{ctx}.z")))
            .collect::<Result<Vec<_>, _>>()?;
        if z.len() != dim {
            return Err(parse_err(format!("{ctx}.z: expected {dim} exponents")));
        }
        let lambda = as_usize(field(m, "lambda", &ctx)?, &format!("{ctx}.lambda"))? as u32;
        let part = |name: &str| -> Result<GaussRational, CliError> {
            let s = field(m, name, &ctx)?
                .as_str()
                .ok_or_else(|| parse_err(format!("{ctx}.{name}: expected a rational string")))?;
            let g: GaussRational = s.parse().map_err(|e| parse_err(format!("{ctx}.{name}: {e}")))?;
            if !g.is_real() {
                return Err(parse_err(format!("{ctx}.{name}: expected a real rational")));
            }
            Ok(g)
        };
        let c = &part("re")? + &(&GaussRational::i() * &part("im")?);
        if c == GaussRational::from_integer(0) {
            return Err(parse_err(format!("{ctx}: zero coefficient")));
        }
        let e = Exponent::new(&z, lambda);
        if last.is_some_and(|prev| prev >= e) {
            return Err(parse_err(format!("{ctx}: monomials out of canonical order")));
        }
        last = Some(e);
        p.add_term(e, c);
    }
    Ok(p)
}
