use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutFormat {
    Tsv,
    Json,
}

/// Where an input came from, with a hash of its bytes.
#[derive(Debug, Clone, Serialize)]
pub struct Source {
    pub role: &'static str,
    pub origin: String,
    pub sha256: String,
}

/// Uniform report: summary fields, an optional table and a verdict.
#[derive(Debug)]
pub struct Report {
    command: &'static str,
    inputs: Vec<Source>,
    summary: Vec<(String, Value)>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
    verdict: bool,
}

impl Report {
    pub fn new(command: &'static str, inputs: Vec<Source>) -> Self {
        Report {
            command,
            inputs,
            summary: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            verdict: true,
        }
    }

    pub fn field(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let value = serde_json::to_value(value).expect("serializable field");
        self.summary.push((key.to_string(), value));
        self
    }

    pub fn columns(&mut self, columns: &[&'static str]) -> &mut Self {
        self.columns = columns.to_vec();
        self
    }

    pub fn row(&mut self, values: Vec<Value>) {
        debug_assert_eq!(values.len(), self.columns.len());
        self.rows.push(values);
    }

    /// Records a checked property; any failure makes the verdict fail.
    pub fn check(&mut self, key: &str, ok: bool) -> &mut Self {
        self.verdict &= ok;
        self.field(key, ok)
    }

    pub fn verdict(&self) -> bool {
        self.verdict
    }

    pub fn render(&self, format: OutFormat) -> String {
        match format {
            OutFormat::Json => self.json(),
            OutFormat::Tsv => self.tsv(),
        }
    }

    fn json(&self) -> String {
        let mut obj = Map::new();
        obj.insert("command".into(), Value::from(self.command));
        obj.insert("inputs".into(), serde_json::to_value(&self.inputs).expect("inputs"));
        for (k, v) in &self.summary {
            obj.insert(k.clone(), v.clone());
        }
        if !self.columns.is_empty() {
            let rows = self
                .rows
                .iter()
                .map(|r| {
                    Value::Object(
                        self.columns
                            .iter()
                            .map(|c| c.to_string())
                            .zip(r.iter().cloned())
                            .collect(),
                    )
                })
                .collect();
            obj.insert("rows".into(), Value::Array(rows));
        }
        obj.insert(
            "verdict".into(),
            Value::from(if self.verdict { "pass" } else { "fail" }),
        );
        let mut out = serde_json::to_string_pretty(&Value::Object(obj)).expect("json");
        out.push('\n');
        out
    }

    fn tsv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.command);
        for s in &self.inputs {
            let _ = writeln!(out, "# input {} {} sha256={}", s.role, s.origin, s.sha256);
        }
        for (k, v) in &self.summary {
            let _ = writeln!(out, "# {k}: {}", cell(v));
        }
        if !self.columns.is_empty() {
            let _ = writeln!(out, "{}", self.columns.join("\t"));
            for r in &self.rows {
                let cells: Vec<String> = r.iter().map(cell).collect();
                let _ = writeln!(out, "{}", cells.join("\t"));
            }
        }
        let _ = writeln!(out, "# verdict: {}", if self.verdict { "pass" } else { "fail" });
        out
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(","),
        Value::Object(map) => {
            let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}: {}", cell(v))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}
