//! Flat records rendered as CSV or JSON.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Num(f64),
    Int(u64),
    Bool(bool),
    Text(String),
}

impl From<f64> for Field {
    fn from(v: f64) -> Self {
        Field::Num(v)
    }
}

impl From<usize> for Field {
    fn from(v: usize) -> Self {
        Field::Int(v as u64)
    }
}

impl From<bool> for Field {
    fn from(v: bool) -> Self {
        Field::Bool(v)
    }
}

impl From<&str> for Field {
    fn from(v: &str) -> Self {
        Field::Text(v.to_string())
    }
}

impl From<String> for Field {
    fn from(v: String) -> Self {
        Field::Text(v)
    }
}

/// An ordered list of named fields.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Record(pub Vec<(String, Field)>);

impl Record {
    pub fn new() -> Self {
        Record(Vec::new())
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<Field>) -> &mut Self {
        self.0.push((key.into(), value.into()));
        self
    }

    pub fn with(mut self, key: impl Into<String>, value: impl Into<Field>) -> Self {
        self.push(key, value);
        self
    }

    pub fn get(&self, key: &str) -> Option<&Field> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }
}

/// 17 significant digits: enough to round-trip any f64.
pub fn fmt_num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else if v.is_nan() {
        "NaN".into()
    } else if v > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn field_text(f: &Field) -> String {
    match f {
        Field::Num(v) => fmt_num(*v),
        Field::Int(v) => v.to_string(),
        Field::Bool(v) => v.to_string(),
        Field::Text(s) => s.clone(),
    }
}

/// Header from the union of keys in first-seen order; missing cells are empty.
pub fn to_csv(records: &[Record]) -> String {
    let mut header: Vec<&str> = Vec::new();
    for r in records {
        for (k, _) in &r.0 {
            if !header.contains(&k.as_str()) {
                header.push(k);
            }
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "{}", header.iter().map(|h| csv_cell(h)).collect::<Vec<_>>().join(","));
    for r in records {
        let row: Vec<String> = header
            .iter()
            .map(|h| r.get(h).map(|f| csv_cell(&field_text(f))).unwrap_or_default())
            .collect();
        let _ = writeln!(out, "{}", row.join(","));
    }
    out
}

fn field_json(f: &Field) -> Value {
    match f {
        // shortest round-trip representation; non-finite values become strings
        Field::Num(v) if v.is_finite() => Value::from(*v),
        Field::Num(v) => Value::String(fmt_num(*v)),
        Field::Int(v) => Value::from(*v),
        Field::Bool(v) => Value::Bool(*v),
        Field::Text(s) => Value::String(s.clone()),
    }
}

/// A JSON array of objects, each carrying the request echo under `request`.
pub fn to_json(records: &[Record], request: &Value) -> String {
    let array: Vec<Value> = records
        .iter()
        .map(|r| {
            let mut obj = Map::new();
            obj.insert("request".into(), request.clone());
            for (k, v) in &r.0 {
                obj.insert(k.clone(), field_json(v));
            }
            Value::Object(obj)
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&Value::Array(array)).unwrap_or_else(|_| "[]".into());
    s.push('\n');
    s
}
