//! Coefficient files:
//!
//! ```text
//! {"right": {"dim": d, "labels": [...], "action": [[coeff vector of m_a·e_i] for i] for a],
//!            "coaction": [[[i, b, c], ...] for each m_a]},
//!  "left":  {"dim": d, "action": [[coeff vector of e_i·n_a] for i] for a],
//!            "coaction": [...] | "delta": [...]}}
//! ```
//!
//! Either side may be omitted, in which case the trivial coefficient is used. A left entry with
//! `delta` instead of `coaction` is an entwined coefficient.

use super::{entwined_left, make_left_coeff, make_right_coeff, CoeffError, EntwinedWitness, LeftCoefficient, RightCoefficient};
use crate::algebra::json::{parse_vector, parse_triples};
use crate::algebra::{AlgebraError, HopfData};
use crate::linalg::{LinMap, Space};
use crate::report::CheckReport;
use serde_json::Value;

fn input(path: &str, msg: impl std::fmt::Display) -> CoeffError {
    CoeffError::Algebra(AlgebraError::Input(format!("{path}: {msg}")))
}

struct Parsed {
    space: Space,
    action: LinMap,
    coaction: Option<LinMap>,
    delta: Option<LinMap>,
}

fn parse_side(h: &HopfData, v: &Value, path: &str, right: bool) -> Result<Parsed, CoeffError> {
    let f = h.field();
    let n = h.dim();
    let d = v.get("dim").and_then(Value::as_u64).ok_or_else(|| input(&format!("{path}.dim"), "missing"))? as usize;
    let space = match v.get("labels").and_then(Value::as_array) {
        Some(ls) if ls.len() == d => Space::new(ls.iter().map(|l| l.as_str().unwrap_or("?").to_string())),
        Some(_) => return Err(input(&format!("{path}.labels"), format!("expected {d} labels"))),
        None => Space::numbered(if right { "m" } else { "n" }, d),
    };
    let act = v.get("action").and_then(Value::as_array).ok_or_else(|| input(&format!("{path}.action"), "missing"))?;
    if act.len() != d {
        return Err(input(&format!("{path}.action"), format!("expected {d} rows")));
    }
    let mut triples = Vec::new();
    for (a, row) in act.iter().enumerate() {
        let row = row.as_array().filter(|r| r.len() == n).ok_or_else(|| input(&format!("{path}.action[{a}]"), format!("expected {n} vectors")))?;
        for (i, vec) in row.iter().enumerate() {
            let c = parse_vector(vec, d, f, &format!("{path}.action[{a}][{i}]"))?;
            let col = if right { a * n + i } else { i * d + a };
            for (b, x) in c.into_iter().enumerate() {
                if !x.is_zero() {
                    triples.push((b, col, x));
                }
            }
        }
    }
    let dom = if right { space.tensor(h.space()) } else { h.space().tensor(&space) };
    let action = LinMap::from_triples(f, dom, space.clone(), triples);
    let coaction_like = |key: &str| -> Result<Option<LinMap>, CoeffError> {
        let Some(c) = v.get(key) else { return Ok(None) };
        let rows = c.as_array().filter(|r| r.len() == d).ok_or_else(|| input(&format!("{path}.{key}"), format!("expected {d} entries")))?;
        let mut t = Vec::new();
        for (a, row) in rows.iter().enumerate() {
            for (i, b, x) in parse_triples(row, n, d, f, &format!("{path}.{key}[{a}]"))? {
                t.push((i * d + b, a, x));
            }
        }
        Ok(Some(LinMap::from_triples(f, space.clone(), h.space().tensor(&space), t)))
    };
    Ok(Parsed { coaction: coaction_like("coaction")?, delta: coaction_like("delta")?, space, action })
}

/// Parses a coefficient file; missing sides are trivial. The report collects the checks that
/// were bypassed with `force`.
pub fn parse_coefficients(
    h: &HopfData,
    text: &str,
    force: bool,
) -> Result<(RightCoefficient, LeftCoefficient, CheckReport), CoeffError> {
    let v: Value = serde_json::from_str(text).map_err(|e| input("JSON", e))?;
    let right = match v.get("right") {
        Some(r) => {
            let p = parse_side(h, r, "right", true)?;
            let c = p.coaction.ok_or_else(|| input("right.coaction", "missing"))?;
            make_right_coeff(h, p.space, p.action, c)?
        }
        None => RightCoefficient::trivial(h),
    };
    let (left, rep) = match v.get("left") {
        Some(l) => {
            let p = parse_side(h, l, "left", false)?;
            match (p.coaction, p.delta) {
                (Some(c), _) => make_left_coeff(h, p.space, p.action, c, force)?,
                (None, Some(delta)) => entwined_left(h, &EntwinedWitness { space: p.space, action: p.action, nabla: delta })?,
                (None, None) => return Err(input("left", "needs \"coaction\" or \"delta\"")),
            }
        }
        None => (LeftCoefficient::trivial(h), CheckReport::new()),
    };
    Ok((right, left, rep))
}
