//! Command reports in text and JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use hopfkit::exactalg::{Field, FieldSpec, Matrix};
use hopfkit::report::{CheckItem, CheckReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub subject: String,
    pub field: String,
    pub checks: Vec<CheckItem>,
    pub derived: BTreeMap<String, Value>,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: &str, subject: impl Into<String>, field: FieldSpec) -> Self {
        Report {
            command: command.into(),
            subject: subject.into(),
            field: field.to_string(),
            checks: Vec::new(),
            derived: BTreeMap::new(),
            exit_code: 0,
        }
    }

    pub fn checks(&mut self, r: CheckReport) -> &mut Self {
        self.checks.extend(r.items);
        self
    }

    pub fn prefixed(&mut self, prefix: &str, r: CheckReport) -> &mut Self {
        let mut out = CheckReport::new();
        out.extend_prefixed(prefix, r);
        self.checks(out)
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) -> &mut Self {
        let mut r = CheckReport::new();
        r.record(name, passed, witness);
        self.checks(r)
    }

    pub fn derive(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.derived.insert(key.into(), value.into());
        self
    }

    pub fn derive_matrix<K: Field>(&mut self, key: &str, m: &Matrix<K>) -> &mut Self {
        self.derive(key, matrix_value(m))
    }

    /// Sets the exit code from the checks: 1 if any failed.
    pub fn finish(mut self) -> Self {
        self.exit_code = if self.checks.iter().all(|c| c.passed) { 0 } else { 1 };
        self
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        if self.checks.is_empty() && self.command == "list-demos" {
            let width = self.derived.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (k, v) in &self.derived {
                let _ = writeln!(out, "{k:width$}  {}", render_value(v));
            }
            return out;
        }
        let _ = writeln!(out, "{} {} over {}", self.command, self.subject, self.field);
        for c in &self.checks {
            let _ = write!(out, "  {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
            if let Some(w) = &c.witness {
                let _ = write!(out, "  [witness: {w}]");
            }
            if let Some(d) = &c.detail {
                let _ = write!(out, "  ({d})");
            }
            out.push('\n');
        }
        if !self.derived.is_empty() {
            out.push_str("derived:\n");
            for (k, v) in &self.derived {
                let _ = writeln!(out, "  {k}: {}", render_value(v));
            }
        }
        let failed = self.checks.len() - self.passed();
        let _ = writeln!(out, "{} passed, {} failed, exit {}", self.passed(), failed, self.exit_code);
        out
    }
}

fn render_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(rows) if rows.iter().all(Value::is_array) => {
            let rows: Vec<String> = rows.iter().map(render_value).collect();
            format!("[{}]", rows.join("; "))
        }
        Value::Array(items) => items.iter().map(render_value).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// Rows of rendered scalars.
pub fn matrix_value<K: Field>(m: &Matrix<K>) -> Value {
    let f = m.field();
    let rows: Vec<Value> = m.to_dense().iter().map(|row| json!(row.iter().map(|x| f.render(x)).collect::<Vec<_>>())).collect();
    Value::Array(rows)
}
