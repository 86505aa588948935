//! JSON structure-constant format.
//!
//! ```text
//! {"dim": n, "field": "Q" | {"Fp": p}, "labels": [...],
//!  "mult": [[[coeff vector of e_i e_j]]], "unit": [coeff vector] (optional),
//!  "comult": [[[j, k, c], ...] for each e_i], "counit": [...],
//!  "antipode": [[coeff vector of S(e_i)]] (optional)}
//! ```
//!
//! Coefficients are integers or `"p/q"` strings. Without `comult` the input is an algebra;
//! with `comult` but no `antipode` it is a bialgebra, unless the antipode equations are
//! solvable, in which case the solution is used.

use super::{AlgebraData, AlgebraError, Bialgebra, CoalgebraData, HopfData, Structure};
use crate::linalg::{Field, LinMap, Scalar, Space};
use serde_json::{json, Value};

fn err(path: &str, msg: impl std::fmt::Display) -> AlgebraError {
    AlgebraError::Input(format!("{path}: {msg}"))
}

pub fn parse_field(v: &Value, path: &str) -> Result<Field, AlgebraError> {
    match v {
        Value::String(s) => s.parse().map_err(|e| err(path, e)),
        Value::Object(o) => {
            let p = o.get("Fp").and_then(Value::as_u64).ok_or_else(|| err(path, "expected {\"Fp\": p}"))?;
            Field::prime(p).map_err(|e| err(path, e))
        }
        _ => Err(err(path, "expected \"Q\" or {\"Fp\": p}")),
    }
}

pub fn field_to_json(f: Field) -> Value {
    match f {
        Field::Rational => json!("Q"),
        Field::Prime(p) => json!({ "Fp": p }),
    }
}

pub fn parse_scalar(v: &Value, field: Field, path: &str) -> Result<Scalar, AlgebraError> {
    match v {
        Value::Number(n) => {
            let i = n.as_i64().ok_or_else(|| err(path, "coefficients must be integers or \"p/q\" strings"))?;
            Ok(field.from_int(i))
        }
        Value::String(s) => field.parse(s).map_err(|e| err(path, e)),
        _ => Err(err(path, "expected a coefficient")),
    }
}

pub fn parse_vector(v: &Value, n: usize, field: Field, path: &str) -> Result<Vec<Scalar>, AlgebraError> {
    let a = v.as_array().ok_or_else(|| err(path, "expected an array"))?;
    if a.len() != n {
        return Err(err(path, format!("expected {n} coefficients, found {}", a.len())));
    }
    a.iter().enumerate().map(|(i, x)| parse_scalar(x, field, &format!("{path}[{i}]"))).collect()
}

pub(crate) fn get<'a>(o: &'a Value, key: &str) -> Result<&'a Value, AlgebraError> {
    o.get(key).ok_or_else(|| err(key, "missing"))
}

pub(crate) fn array<'a>(v: &'a Value, path: &str, len: usize) -> Result<&'a Vec<Value>, AlgebraError> {
    let a = v.as_array().ok_or_else(|| err(path, "expected an array"))?;
    if a.len() != len {
        return Err(err(path, format!("expected {len} entries, found {}", a.len())));
    }
    Ok(a)
}

/// Parses triples `[j, k, c]` meaning `c·e_j⊗e_k`.
pub(crate) fn parse_triples(v: &Value, n1: usize, n2: usize, field: Field, path: &str) -> Result<Vec<(usize, usize, Scalar)>, AlgebraError> {
    let a = v.as_array().ok_or_else(|| err(path, "expected a list of triples"))?;
    a.iter()
        .enumerate()
        .map(|(t, x)| {
            let p = format!("{path}[{t}]");
            let tr = array(x, &p, 3)?;
            let j = tr[0].as_u64().filter(|&j| (j as usize) < n1).ok_or_else(|| err(&p, "bad first index"))?;
            let k = tr[1].as_u64().filter(|&k| (k as usize) < n2).ok_or_else(|| err(&p, "bad second index"))?;
            Ok((j as usize, k as usize, parse_scalar(&tr[2], field, &format!("{p}[2]"))?))
        })
        .collect()
}

/// Parses the algebra input format. `field_override` replaces the file's field.
pub fn parse_structure(text: &str, field_override: Option<Field>) -> Result<Structure, AlgebraError> {
    let v: Value = serde_json::from_str(text).map_err(|e| AlgebraError::Input(format!("JSON: {e}")))?;
    structure_from_value(&v, field_override)
}

pub fn structure_from_value(v: &Value, field_override: Option<Field>) -> Result<Structure, AlgebraError> {
    let n = get(v, "dim")?.as_u64().ok_or_else(|| err("dim", "expected a nonnegative integer"))? as usize;
    let field = match (field_override, v.get("field")) {
        (Some(f), _) => f,
        (None, Some(f)) => parse_field(f, "field")?,
        (None, None) => Field::Rational,
    };
    let labels: Vec<String> = match v.get("labels") {
        Some(l) => array(l, "labels", n)?
            .iter()
            .enumerate()
            .map(|(i, s)| s.as_str().map(String::from).ok_or_else(|| err(&format!("labels[{i}]"), "expected a string")))
            .collect::<Result<_, _>>()?,
        None => (0..n).map(|i| format!("e{i}")).collect(),
    };
    let sp = Space::new(labels);
    let hh = sp.tensor(&sp);
    let mut triples = Vec::new();
    let rows = array(get(v, "mult")?, "mult", n)?;
    for (i, row) in rows.iter().enumerate() {
        for (j, vec) in array(row, &format!("mult[{i}]"), n)?.iter().enumerate() {
            let c = parse_vector(vec, n, field, &format!("mult[{i}][{j}]"))?;
            for (k, x) in c.into_iter().enumerate() {
                triples.push((k, i * n + j, x));
            }
        }
    }
    let mult = LinMap::from_triples(field, hh.clone(), sp.clone(), triples);
    let unit = match v.get("unit") {
        Some(u) => {
            let c = parse_vector(u, n, field, "unit")?;
            LinMap::from_triples(field, Space::ground(), sp.clone(), c.into_iter().enumerate().map(|(k, x)| (k, 0, x)))
        }
        None => find_unit(&mult, &sp, field)?,
    };
    let algebra = AlgebraData::new(sp.clone(), mult, unit)?;
    let Some(cv) = v.get("comult") else {
        return Ok(Structure::Algebra(algebra));
    };
    let mut triples = Vec::new();
    for (i, t) in array(cv, "comult", n)?.iter().enumerate() {
        for (j, k, c) in parse_triples(t, n, n, field, &format!("comult[{i}]"))? {
            triples.push((j * n + k, i, c));
        }
    }
    let comult = LinMap::from_triples(field, sp.clone(), hh, triples);
    let c = parse_vector(get(v, "counit")?, n, field, "counit")?;
    let counit = LinMap::from_triples(field, sp.clone(), Space::ground(), c.into_iter().enumerate().map(|(k, x)| (0, k, x)));
    let coalgebra = CoalgebraData::new(sp.clone(), comult, counit)?;
    let name = v.get("name").and_then(Value::as_str).unwrap_or("input").to_string();
    let bialgebra = Bialgebra::new(name, algebra, coalgebra)?;
    match v.get("antipode") {
        Some(a) => {
            let mut triples = Vec::new();
            for (i, vec) in array(a, "antipode", n)?.iter().enumerate() {
                for (k, x) in parse_vector(vec, n, field, &format!("antipode[{i}]"))?.into_iter().enumerate() {
                    triples.push((k, i, x));
                }
            }
            let s = LinMap::from_triples(field, sp.clone(), sp, triples);
            Ok(Structure::Hopf(HopfData::new(bialgebra, s)?))
        }
        None => match bialgebra.solve_antipode() {
            Some(s) if bialgebra.check(super::Strength::Bialgebra).all_passed() => {
                Ok(Structure::Hopf(HopfData::new(bialgebra, s)?))
            }
            _ => Ok(Structure::Bialgebra(bialgebra)),
        },
    }
}

/// Solves `m(u⊗x) = x = m(x⊗u)` for the unit `u`.
fn find_unit(mult: &LinMap, sp: &Space, field: Field) -> Result<LinMap, AlgebraError> {
    let n = sp.dim();
    let mut rows = Vec::new();
    for x in 0..n {
        for side in 0..2 {
            let mut eq = vec![vec![field.zero(); n + 1]; n];
            for u in 0..n {
                let col = if side == 0 { u * n + x } else { x * n + u };
                for (r, c) in mult.column(col) {
                    eq[r][u] = &eq[r][u] + &c;
                }
            }
            eq[x][n] = field.one();
            rows.extend(eq);
        }
    }
    let (rref, pivots) = crate::linalg::elim::rref(field, rows, n + 1);
    if pivots.last() == Some(&n) {
        return Err(err("unit", "multiplication has no two-sided unit; give \"unit\" explicitly"));
    }
    let triples = rref.iter().zip(&pivots).map(|(row, p)| (*p, 0, row[n].clone())).collect::<Vec<_>>();
    Ok(LinMap::from_triples(field, Space::ground(), sp.clone(), triples))
}

fn vec_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_json).collect())
}

pub fn scalar_json(s: &Scalar) -> Value {
    match s {
        Scalar::Q(r) if r.is_integer() && r.numer().to_string().len() < 16 => {
            json!(r.numer().to_string().parse::<i64>().unwrap())
        }
        _ => json!(s.to_string()),
    }
}

/// Serializes a structure into the input format.
pub fn structure_to_json(s: &Structure) -> Value {
    let a = s.algebra();
    let n = a.dim();
    let f = a.field();
    let dense = |m: &LinMap, j: usize| -> Vec<Scalar> {
        let mut v = vec![f.zero(); m.codomain().dim()];
        for (i, x) in m.column(j) {
            v[i] = x;
        }
        v
    };
    let mult: Vec<Value> = (0..n)
        .map(|i| Value::Array((0..n).map(|j| vec_json(&dense(&a.mult, i * n + j))).collect()))
        .collect();
    let mut out = json!({
        "dim": n,
        "field": field_to_json(f),
        "labels": a.space.labels(),
        "mult": mult,
        "unit": vec_json(&dense(&a.unit, 0)),
    });
    if let Some(b) = s.bialgebra() {
        out["name"] = json!(b.name);
        let comult: Vec<Value> = (0..n)
            .map(|i| {
                Value::Array(b.comult_basis(i).iter().map(|(j, k, c)| json!([j, k, scalar_json(c)])).collect())
            })
            .collect();
        out["comult"] = Value::Array(comult);
        out["counit"] = Value::Array((0..n).map(|i| scalar_json(b.counit_basis(i))).collect());
    }
    if let Structure::Hopf(h) = s {
        out["antipode"] = Value::Array((0..n).map(|i| vec_json(&dense(&h.antipode, i))).collect());
    }
    out
}
