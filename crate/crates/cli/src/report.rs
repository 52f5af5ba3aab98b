use std::fmt::Write;

use serde_json::{json, Value as Json};
use symat::smatroid::{AdmissibleSet, PlainSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Tsv,
    Structured,
}

#[derive(Debug, Clone)]
pub enum Value {
    Int(u64),
    Bool(bool),
    Text(String),
    /// element names of a set, in canonical order
    Set(Vec<String>),
    List(Vec<i128>),
}

impl Value {
    pub fn set(s: AdmissibleSet) -> Self {
        Self::Set(s.elements().map(|e| e.to_string()).collect())
    }

    pub fn plain(s: PlainSet) -> Self {
        Self::Set(s.elements().map(|e| e.to_string()).collect())
    }

    fn human(&self) -> String {
        match self {
            Self::Int(i) => i.to_string(),
            Self::Bool(b) => b.to_string(),
            Self::Text(t) => t.clone(),
            Self::Set(s) => format!("{{{}}}", s.join(", ")),
            Self::List(l) => format!("[{}]", l.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")),
        }
    }

    fn tsv(&self) -> String {
        match self {
            Self::Set(s) => s.join(" "),
            Self::List(l) => l.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "),
            other => other.human(),
        }
    }

    fn json(&self) -> Json {
        match self {
            Self::Int(i) => json!(i),
            Self::Bool(b) => json!(b),
            Self::Text(t) => json!(t),
            Self::Set(s) => json!(s),
            // i128 is outside JSON's integer range in general, so coefficients go out as strings
            Self::List(l) => Json::Array(
                l.iter().map(|c| i64::try_from(*c).map_or_else(|_| json!(c.to_string()), |v| json!(v))).collect(),
            ),
        }
    }
}

/// An ordered list of `key: value` records.
#[derive(Debug, Default)]
pub struct Report {
    records: Vec<(String, Value)>,
}

impl Report {
    pub fn push(&mut self, key: impl Into<String>, value: Value) {
        self.records.push((key.into(), value));
    }

    pub fn int(&mut self, key: &str, v: usize) {
        self.push(key, Value::Int(v as u64));
    }

    pub fn flag(&mut self, key: &str, v: bool) {
        self.push(key, Value::Bool(v));
    }

    pub fn text(&mut self, key: &str, v: impl Into<String>) {
        self.push(key, Value::Text(v.into()));
    }

    pub fn sets<'a>(&mut self, key: &str, sets: impl IntoIterator<Item = &'a AdmissibleSet>) {
        for &s in sets {
            self.push(key, Value::set(s));
        }
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for (k, v) in &self.records {
            match format {
                Format::Human => writeln!(out, "{k}: {}", v.human()),
                Format::Tsv => writeln!(out, "{k}\t{}", v.tsv()),
                Format::Structured => writeln!(out, "{}", json!({ "key": k, "value": v.json() })),
            }
            .expect("writing to a String cannot fail");
        }
        out
    }
}
