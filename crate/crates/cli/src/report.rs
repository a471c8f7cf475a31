//! Rendering of command results as JSON, CSV or plain text.

use paley_core::SCHEMA_VERSION;
use serde_json::{Map, Value};

use crate::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Inapplicable = 2,
    Violation = 3,
    Timeout = 4,
}

#[derive(Debug, Clone)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Table {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn row(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    /// `path,value` rows for every leaf of a JSON value.
    fn flattened(value: &Value) -> Table {
        let mut t = Table::new(&["key", "value"]);
        flatten(value, String::new(), &mut t.rows);
        t
    }

    fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn flatten(value: &Value, prefix: String, rows: &mut Vec<Vec<String>>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(v, key, rows);
            }
        }
        // arrays of scalars stay on one line
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let joined: Vec<String> = items.iter().map(scalar).collect();
            rows.push(vec![prefix, format!("[{}]", joined.join(" "))]);
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(v, format!("{prefix}[{i}]"), rows);
            }
        }
        other => rows.push(vec![prefix, scalar(other)]),
    }
}

pub struct Report {
    command: &'static str,
    value: Value,
    table: Option<Table>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &'static str, value: Value) -> Report {
        Report { command, value, table: None, status: Status::Ok }
    }

    pub fn with_table(mut self, table: Table) -> Report {
        self.table = Some(table);
        self
    }

    pub fn with_status(mut self, status: Status) -> Report {
        self.status = status;
        self
    }

    fn envelope(&self) -> Value {
        let mut map = Map::new();
        map.insert("schema".into(), Value::from(SCHEMA_VERSION));
        map.insert("command".into(), Value::from(self.command));
        match &self.value {
            Value::Object(inner) => {
                for (k, v) in inner {
                    if k != "schema" {
                        map.insert(k.clone(), v.clone());
                    }
                }
            }
            other => {
                map.insert("result".into(), other.clone());
            }
        }
        Value::Object(map)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.envelope()).expect("JSON values serialize");
                s.push('\n');
                s
            }
            Format::Csv => match &self.table {
                Some(t) => t.to_csv(),
                None => Table::flattened(&self.envelope()).to_csv(),
            },
            Format::Text => {
                let t = Table::flattened(&self.envelope());
                let width = t.rows.iter().map(|r| r[0].len()).max().unwrap_or(0);
                t.rows.iter().map(|r| format!("{:width$}  {}\n", r[0], r[1])).collect()
            }
        }
    }
}
