//! Check reports shared by the stable-layer operations and the CLI.

use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub op: String,
    pub window: (i64, i64),
    pub regime: Option<String>,
    pub dims: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(op: impl Into<String>, window: (i64, i64)) -> Self {
        Report { op: op.into(), window, regime: None, dims: Map::new(), checks: Vec::new() }
    }

    pub fn with_regime(mut self, regime: impl ToString) -> Self {
        self.regime = Some(regime.to_string());
        self
    }

    pub fn dim(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.dims.insert(key.into(), value.into());
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool) {
        self.checks.push(Check { name: name.into(), pass, witness: None });
    }

    pub fn check_with(&mut self, name: impl Into<String>, pass: bool, witness: Value) {
        self.checks.push(Check { name: name.into(), pass, witness: Some(witness) });
    }

    /// Appends the checks of `other`, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut o = json!({ "name": c.name, "pass": c.pass });
                if let Some(w) = &c.witness {
                    o["witness"] = w.clone();
                }
                o
            })
            .collect();
        let mut out = json!({
            "op": self.op,
            "window": [self.window.0, self.window.1],
            "dims": Value::Object(self.dims.clone()),
            "checks": checks,
        });
        if let Some(r) = &self.regime {
            out["regime"] = json!(r);
        }
        out
    }
}
