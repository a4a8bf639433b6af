//! JSON formats for algebras, modules, matrices and complexes.
//!
//! Algebra: `{"field": {"p": 2} | "Q", "dim", "unit", "mult": [[i, j, [coeffs]]], "radical"?,
//! "hopf"?: {"comul": [[i, j, k, c]], "counit", "antipode": [[row]]}, "labels"?}` where a
//! `comul` entry says that `b_j ⊗ b_k` has coefficient `c` in `Δ(b_i)`.
//! Module: `{"algebra"?: algebra, "dim", "action": [matrix per basis element]}`.
//! Complex: `{"algebra"?: algebra, "terms": {"n": module}, "diffs": {"n": matrix}}`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::algebra::{ensure_same, Algebra, AlgebraSpec, HopfDatum};
use crate::complexes::ChainComplex;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::modrep::Module;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field `{key}`")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| parse_err(format!("`{what}` must be a non-negative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("`{what}` must be an array")))
}

/// `{"p": p}` for prime fields, `"Q"` for the rationals.
pub fn field_to_json<F: Field>() -> Value {
    match F::characteristic() {
        0 => json!("Q"),
        p => json!({ "p": p }),
    }
}

/// The field name (`F2`, `Q`, ...) recorded in a JSON field descriptor.
pub fn field_name_from_json(v: &Value) -> Result<String> {
    match v {
        Value::String(s) if s == "Q" => Ok("Q".into()),
        Value::Object(o) => {
            let p = o.get("p").and_then(Value::as_u64).ok_or_else(|| parse_err("field must be {\"p\": prime} or \"Q\""))?;
            Ok(format!("F{p}"))
        }
        _ => Err(parse_err("field must be {\"p\": prime} or \"Q\"")),
    }
}

pub fn vector_to_json<F: Field>(v: &[F]) -> Value {
    Value::Array(v.iter().map(Field::to_json).collect())
}

pub fn vector_from_json<F: Field>(v: &Value, len: Option<usize>) -> Result<Vec<F>> {
    let out = as_array(v, "vector")?.iter().map(F::from_json).collect::<Result<Vec<F>>>()?;
    if let Some(n) = len {
        if out.len() != n {
            return Err(Error::DimensionMismatch(format!("vector of length {}, expected {n}", out.len())));
        }
    }
    Ok(out)
}

pub fn matrix_to_json<F: Field>(m: &Matrix<F>) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_to_json(m.row(r))).collect())
}

/// A list of rows; `cols` is needed to read matrices with no rows.
pub fn matrix_from_json<F: Field>(v: &Value, rows: usize, cols: usize) -> Result<Matrix<F>> {
    let r = as_array(v, "matrix")?;
    if r.len() != rows {
        return Err(Error::DimensionMismatch(format!("matrix has {} rows, expected {rows}", r.len())));
    }
    let rows = r.iter().map(|row| vector_from_json(row, Some(cols))).collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(&rows, cols))
}

pub fn algebra_to_json<F: Field>(a: &Algebra<F>) -> Value {
    let n = a.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let p = a.basis_product(i, j);
            if p.iter().any(|c| !c.is_zero()) {
                mult.push(json!([i, j, vector_to_json(&p)]));
            }
        }
    }
    let mut out = json!({
        "field": field_to_json::<F>(),
        "dim": n,
        "unit": vector_to_json(a.unit()),
        "mult": mult,
    });
    if let Some(r) = a.radical() {
        out["radical"] = matrix_to_json(r);
    }
    if let Some(h) = a.hopf() {
        let mut comul = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = &h.comul()[(i, j * n + k)];
                    if !c.is_zero() {
                        comul.push(json!([i, j, k, c.to_json()]));
                    }
                }
            }
        }
        out["hopf"] = json!({
            "comul": comul,
            "counit": vector_to_json(h.counit()),
            "antipode": matrix_to_json(h.antipode()),
        });
    }
    if let Some(l) = a.labels() {
        out["labels"] = json!(l);
    }
    out
}

pub fn algebra_from_json<F: Field>(v: &Value) -> Result<Algebra<F>> {
    let name = field_name_from_json(field(v, "field")?)?;
    if name != F::name() {
        return Err(Error::FieldMismatch { expected: F::name(), found: name });
    }
    let n = as_usize(field(v, "dim")?, "dim")?;
    let unit = vector_from_json(field(v, "unit")?, Some(n))?;
    let mut mult = Vec::new();
    for e in as_array(field(v, "mult")?, "mult")? {
        let e = as_array(e, "mult entry")?;
        if e.len() != 3 {
            return Err(parse_err("mult entries are [i, j, [coeffs]]"));
        }
        mult.push((as_usize(&e[0], "i")?, as_usize(&e[1], "j")?, vector_from_json(&e[2], Some(n))?));
    }
    let radical = match v.get("radical") {
        None | Some(Value::Null) => None,
        Some(r) => Some(as_array(r, "radical")?.iter().map(|x| vector_from_json(x, Some(n))).collect::<Result<Vec<_>>>()?),
    };
    let hopf = match v.get("hopf") {
        None | Some(Value::Null) => None,
        Some(h) => {
            let mut comul = Matrix::zeros(n, n * n);
            for e in as_array(field(h, "comul")?, "comul")? {
                let e = as_array(e, "comul entry")?;
                if e.len() != 4 {
                    return Err(parse_err("comul entries are [i, j, k, coeff]"));
                }
                let (i, j, k) = (as_usize(&e[0], "i")?, as_usize(&e[1], "j")?, as_usize(&e[2], "k")?);
                if i >= n || j >= n || k >= n {
                    return Err(Error::DimensionMismatch(format!("comul entry ({i}, {j}, {k}) out of range")));
                }
                comul[(i, j * n + k)] = F::from_json(&e[3])?;
            }
            let counit = vector_from_json(field(h, "counit")?, Some(n))?;
            let antipode = matrix_from_json(field(h, "antipode")?, n, n)?;
            Some(HopfDatum::new(comul, counit, antipode)?)
        }
    };
    let labels = match v.get("labels") {
        None | Some(Value::Null) => None,
        Some(l) => Some(
            as_array(l, "labels")?
                .iter()
                .map(|s| s.as_str().map(str::to_string).ok_or_else(|| parse_err("labels must be strings")))
                .collect::<Result<Vec<_>>>()?,
        ),
    };
    Algebra::new(AlgebraSpec { dim: n, mult, unit, radical, hopf, labels })
}

/// Module JSON; the algebra is embedded when `with_algebra` is set.
pub fn module_to_json<F: Field>(m: &Module<F>, with_algebra: bool) -> Value {
    let mut out = json!({
        "dim": m.dim(),
        "action": m.action().iter().map(matrix_to_json).collect::<Vec<_>>(),
    });
    if with_algebra {
        out["algebra"] = algebra_to_json(m.algebra());
    }
    out
}

/// Reads the `algebra` entry of a module or complex: inline, or a path relative to `base`.
pub fn algebra_ref_from_json<F: Field>(v: &Value, base: Option<&Path>) -> Result<Option<Algebra<F>>> {
    match v.get("algebra") {
        None | Some(Value::Null) => Ok(None),
        Some(Value::String(p)) => {
            let path = match base {
                Some(b) => b.join(p),
                None => Path::new(p).to_path_buf(),
            };
            Ok(Some(algebra_from_json(&read_json(&path)?)?))
        }
        Some(inline) => Ok(Some(algebra_from_json(inline)?)),
    }
}

/// A module over `algebra`; an embedded algebra must agree with it.
pub fn module_from_json<F: Field>(v: &Value, algebra: &Arc<Algebra<F>>, base: Option<&Path>) -> Result<Module<F>> {
    if let Some(own) = algebra_ref_from_json::<F>(v, base)? {
        ensure_same(&Arc::new(own), algebra)?;
    }
    let d = as_usize(field(v, "dim")?, "dim")?;
    let action = as_array(field(v, "action")?, "action")?;
    if action.len() != algebra.dim() {
        return Err(Error::InvalidModule(format!("{} action matrices for an algebra of dimension {}", action.len(), algebra.dim())));
    }
    let mats = action.iter().map(|m| matrix_from_json(m, d, d)).collect::<Result<Vec<_>>>()?;
    if d == 0 {
        return Ok(Module::zero(algebra.clone()));
    }
    Module::new(algebra.clone(), mats)
}

/// The degrees `[lo, hi]` of a complex as explicit terms and differentials.
pub fn complex_to_json<F: Field>(x: &ChainComplex<F>, lo: i64, hi: i64, with_algebra: bool) -> Result<Value> {
    let mut terms = Map::new();
    let mut diffs = Map::new();
    for n in lo..=hi {
        terms.insert(n.to_string(), module_to_json(&x.term(n)?, false));
        if n < hi {
            diffs.insert(n.to_string(), matrix_to_json(&x.diff(n)?));
        }
    }
    let mut out = json!({ "terms": terms, "diffs": diffs });
    if with_algebra {
        out["algebra"] = algebra_to_json(x.algebra());
    }
    Ok(out)
}

fn degree_map(v: &Value, what: &str) -> Result<BTreeMap<i64, Value>> {
    let Some(o) = v.as_object() else {
        return Err(parse_err(format!("`{what}` must be an object keyed by degree")));
    };
    o.iter()
        .map(|(k, x)| Ok((k.trim().parse::<i64>().map_err(|_| parse_err(format!("bad degree `{k}`")))?, x.clone())))
        .collect()
}

/// A bounded complex; degrees between the extreme terms default to zero.
pub fn complex_from_json<F: Field>(v: &Value, algebra: &Arc<Algebra<F>>, base: Option<&Path>) -> Result<ChainComplex<F>> {
    if let Some(own) = algebra_ref_from_json::<F>(v, base)? {
        ensure_same(&Arc::new(own), algebra)?;
    }
    let terms = degree_map(field(v, "terms")?, "terms")?;
    let diffs = match v.get("diffs") {
        None => BTreeMap::new(),
        Some(d) => degree_map(d, "diffs")?,
    };
    let (Some(&lo), Some(&hi)) = (terms.keys().next(), terms.keys().next_back()) else {
        return Ok(ChainComplex::zero(algebra.clone()));
    };
    let mods = (lo..=hi)
        .map(|n| match terms.get(&n) {
            Some(t) => module_from_json(t, algebra, base),
            None => Ok(Module::zero(algebra.clone())),
        })
        .collect::<Result<Vec<_>>>()?;
    if let Some(n) = diffs.keys().find(|n| **n < lo || **n >= hi) {
        return Err(Error::InvalidComplex(format!("differential in degree {n} leaves the terms")));
    }
    let ds = (lo..hi)
        .map(|n| {
            let (r, c) = (mods[(n - lo) as usize].dim(), mods[(n - lo + 1) as usize].dim());
            match diffs.get(&n) {
                Some(d) => matrix_from_json(d, r, c),
                None => Ok(Matrix::zeros(r, c)),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    ChainComplex::explicit(algebra.clone(), lo, mods, ds)
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| parse_err(format!("{}: {e}", path.display())))
}
