//! The report model and its three renderings.
//!
//! JSON keys are sorted (serde_json's default map is ordered), rationals are
//! `"p/q"` strings and big integers are decimal strings, so serializing,
//! parsing and serializing again is byte-stable. The CSV form is the list of
//! `(path, value)` leaves of the same tree.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Mismatch,
    ResourceLimit,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::ResourceLimit => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub sections: BTreeMap<String, Value>,
    pub provenance: Value,
    pub status: Status,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Report {
    pub fn new(command: &str, input: Value, provenance: Value) -> Self {
        Report {
            command: command.to_string(),
            input,
            sections: BTreeMap::new(),
            provenance,
            status: Status::Ok,
        }
    }

    pub fn section(&mut self, key: &str, value: Value) {
        self.sections.insert(key.to_string(), value);
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("reports are plain data")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("reports are plain data");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_csv(&self) -> String {
        leaves_to_csv(&flatten(&self.to_value()))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} ({})\n", self.command, status_word(self.status));
        let v = self.to_value();
        for key in ["input", "sections", "provenance"] {
            match &v[key] {
                Value::Object(m) if key == "sections" => {
                    for (k, v) in m {
                        write_text(&mut out, k, v, 0);
                    }
                }
                other => write_text(&mut out, key, other, 0),
            }
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Mismatch => "mismatch",
        Status::ResourceLimit => "resource-limit",
    }
}

/// Text form of a scalar leaf.
pub fn scalar_text(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Leaves of the tree as `(path, value)`, in key order. Object members are
/// joined with `.`, array items use `[i]`. Empty containers appear as a
/// single leaf with value `[]` or `{}` so they survive the round trip.
pub fn flatten(v: &Value) -> Vec<(String, String)> {
    fn go(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
        match v {
            Value::Object(m) if !m.is_empty() => {
                for (k, x) in m {
                    let p = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{prefix}.{k}")
                    };
                    go(&p, x, out);
                }
            }
            Value::Array(a) if !a.is_empty() => {
                for (i, x) in a.iter().enumerate() {
                    go(&format!("{prefix}[{i}]"), x, out);
                }
            }
            Value::Object(_) => out.push((prefix.to_string(), "{}".into())),
            Value::Array(_) => out.push((prefix.to_string(), "[]".into())),
            other => out.push((prefix.to_string(), scalar_text(other))),
        }
    }
    let mut out = Vec::new();
    go("", v, &mut out);
    out
}

pub fn leaves_to_csv(leaves: &[(String, String)]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["path", "value"]).expect("in-memory write");
    for (p, v) in leaves {
        w.write_record([p, v]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn csv_to_leaves(text: &str) -> Result<Vec<(String, String)>, csv::Error> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.records()
        .map(|rec| {
            let rec = rec?;
            Ok((rec[0].to_string(), rec[1].to_string()))
        })
        .collect()
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn write_text(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) if !m.is_empty() => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, x) in m {
                write_text(out, k, x, depth + 1);
            }
        }
        Value::Array(a) if a.iter().all(is_scalar) => {
            let items: Vec<String> = a.iter().map(scalar_text).collect();
            let _ = writeln!(out, "{pad}{key}: [{}]", items.join(", "));
        }
        Value::Array(a) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (i, x) in a.iter().enumerate() {
                write_text(out, &format!("[{i}]"), x, depth + 1);
            }
        }
        Value::Object(_) => {
            let _ = writeln!(out, "{pad}{key}: {{}}");
        }
        Value::String(s) if s.contains('\n') => {
            let _ = writeln!(out, "{pad}{key}: |");
            for line in s.lines() {
                let _ = writeln!(out, "{pad}  {line}");
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{key}: {}", scalar_text(other));
        }
    }
}
