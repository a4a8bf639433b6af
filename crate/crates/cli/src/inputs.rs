use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde_json::Value;
use tate_core::algebra::preset;
use tate_core::io::{algebra_from_json, field_name_from_json, matrix_from_json, module_from_json, read_json};
use tate_core::modrep::{cosyzygy, syzygy};
use tate_core::{Algebra, Error, Field, Matrix, Module, Result};

use crate::args::AlgebraInput;

/// Where the algebra comes from, with the name of its field.
pub enum Source {
    Preset { name: String, field: String },
    File { path: PathBuf, json: Value, field: String },
}

impl Source {
    pub fn resolve(input: &AlgebraInput) -> Result<Source> {
        if let Some(p) = &input.preset {
            let (name, field) = match p.rsplit_once('@') {
                Some((n, f)) => (n.trim().to_string(), f.trim().to_string()),
                None => (p.trim().to_string(), "F2".to_string()),
            };
            return Ok(Source::Preset { name, field });
        }
        let path = PathBuf::from(input.algebra.as_deref().expect("clap requires an algebra source"));
        let json = read_json(&path)?;
        let field = field_name_from_json(json.get("field").ok_or_else(|| Error::Parse("missing field `field`".into()))?)?;
        Ok(Source::File { path, json, field })
    }

    pub fn field(&self) -> &str {
        match self {
            Source::Preset { field, .. } | Source::File { field, .. } => field,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Source::Preset { name, field } => format!("{name}@{field}"),
            Source::File { path, .. } => path.display().to_string(),
        }
    }

    pub fn load<F: Field>(&self) -> Result<Arc<Algebra<F>>> {
        Ok(Arc::new(match self {
            Source::Preset { name, .. } => preset::<F>(name)?,
            Source::File { json, .. } => algebra_from_json::<F>(json)?,
        }))
    }
}

fn json_input(s: &str) -> Result<(Value, Option<PathBuf>)> {
    let t = s.trim();
    if t.starts_with('[') || t.starts_with('{') {
        let v = serde_json::from_str(t).map_err(|e| Error::Parse(format!("inline JSON: {e}")))?;
        return Ok((v, None));
    }
    let path = Path::new(t);
    Ok((read_json(path)?, path.parent().map(Path::to_path_buf)))
}

/// A row matrix given inline as JSON or in a file.
pub fn matrix_arg<F: Field>(s: &str, cols: usize) -> Result<Matrix<F>> {
    let (v, _) = json_input(s)?;
    let rows = v.as_array().ok_or_else(|| Error::Parse("a matrix is a list of rows".into()))?.len();
    matrix_from_json(&v, rows, cols)
}

fn split_args(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(s[start..].trim());
    out
}

/// Module expressions: `k`, `top`, `regular`, `free(n)`, `cogenerator`, `zero`, `omega(X)`,
/// `sigma(X)`, `omega^n(X)`, `sigma^n(X)`, `sum(X, Y, ...)`, or a module JSON file.
pub fn module_arg<F: Field>(a: &Arc<Algebra<F>>, spec: &str) -> Result<Module<F>> {
    let s = spec.trim();
    match s {
        "k" | "trivial" => return Module::trivial(a.clone()),
        "top" => return Module::top(a.clone()),
        "regular" | "Λ" => return Ok(Module::regular(a.clone())),
        "cogenerator" => return Ok(Module::cogenerator(a.clone())),
        "zero" | "0" => return Ok(Module::zero(a.clone())),
        _ => {}
    }
    if s.ends_with(".json") || s.starts_with('{') {
        let (v, base) = json_input(s)?;
        return module_from_json(&v, a, base.as_deref());
    }
    let bad = || Error::Parse(format!("cannot read module expression `{s}`"));
    let (head, rest) = s.split_once('(').ok_or_else(bad)?;
    let inner = rest.strip_suffix(')').ok_or_else(bad)?;
    let (op, times) = match head.trim().split_once('^') {
        Some((op, n)) => (op.trim(), n.trim().parse::<usize>().map_err(|_| bad())?),
        None => (head.trim(), 1),
    };
    match op {
        "free" => {
            let n = inner.trim().parse::<usize>().map_err(|_| bad())?;
            Ok(Module::free(a.clone(), n))
        }
        "sum" => {
            let parts = split_args(inner).into_iter().map(|p| module_arg(a, p)).collect::<Result<Vec<_>>>()?;
            Ok(Module::direct_sum_of(a, &parts))
        }
        "omega" | "sigma" => {
            let mut m = module_arg(a, inner)?;
            for _ in 0..times {
                m = if op == "omega" { syzygy(&m)?.0 } else { cosyzygy(&m)?.0 };
            }
            Ok(m)
        }
        _ => Err(bad()),
    }
}

/// The complex file with its directory, for relative algebra paths.
pub fn complex_file(s: &str) -> Result<(Value, Option<PathBuf>)> {
    json_input(s)
}
