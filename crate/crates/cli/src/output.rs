use serde_json::{json, Map, Value};
use tate_core::Error;

use crate::args::Format;

pub const SCHEMA: u64 = 1;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_internal() => 2,
            _ => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        let (kind, message) = match self {
            CliError::Core(e) => (e.kind().to_string(), e.to_string()),
            CliError::Usage(m) => ("usage".to_string(), m.clone()),
        };
        json!({ "schema": SCHEMA, "error": { "kind": kind, "message": message } })
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// A dimension table: one row per degree or object.
#[derive(Debug, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn to_json(&self) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|r| Value::Object(self.columns.iter().cloned().zip(r.iter().cloned()).collect::<Map<_, _>>()))
            .collect();
        Value::Array(rows)
    }
}

/// Everything a command produces; `failed` marks failed consistency checks.
#[derive(Debug, Default)]
pub struct Output {
    pub command: String,
    pub algebra: String,
    pub field: String,
    pub window: Option<(i64, i64)>,
    pub regime: Option<String>,
    pub body: Map<String, Value>,
    pub table: Option<Table>,
    pub failed: bool,
}

impl Output {
    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.body.insert(key.to_string(), value.into());
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut m = self.body.clone();
                m.insert("schema".into(), json!(SCHEMA));
                m.insert("command".into(), json!(self.command));
                m.insert("algebra".into(), json!(self.algebra));
                // the preset command keeps the algebra format's own field descriptor
                m.entry("field").or_insert_with(|| json!(self.field));
                if let Some((lo, hi)) = self.window {
                    m.insert("window".into(), json!([lo, hi]));
                }
                if let Some(r) = &self.regime {
                    m.insert("regime".into(), json!(r));
                }
                if let Some(t) = &self.table {
                    m.insert("table".into(), t.to_json());
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("JSON values serialize");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => {
                let t = self
                    .table
                    .as_ref()
                    .ok_or_else(|| CliError::Usage(format!("`{}` has no table to write as CSV", self.command)))?;
                let mut out = format!("# schema={SCHEMA} command={} algebra={} field={}", self.command, self.algebra, self.field);
                if let Some((lo, hi)) = self.window {
                    out.push_str(&format!(" window={lo}..{hi}"));
                }
                if let Some(r) = &self.regime {
                    out.push_str(&format!(" regime={r}"));
                }
                out.push('\n');
                let mut w = csv::Writer::from_writer(Vec::new());
                let io = |e: csv::Error| CliError::Core(Error::Io(e.to_string()));
                w.write_record(&t.columns).map_err(io)?;
                for r in &t.rows {
                    w.write_record(r.iter().map(|v| match v {
                        Value::String(s) => s.clone(),
                        Value::Null => String::new(),
                        other => other.to_string(),
                    }))
                    .map_err(io)?;
                }
                let bytes = w.into_inner().map_err(|e| CliError::Core(Error::Io(e.to_string())))?;
                out.push_str(&String::from_utf8(bytes).expect("CSV of UTF-8 fields"));
                Ok(out)
            }
        }
    }
}
