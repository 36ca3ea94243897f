//! Command reports: a list of named results rendered as aligned text or as
//! one JSON document.

use std::time::Duration;

use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Fails,
    Skipped,
    Undecided,
    Found,
    Exhausted,
    Timeout,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Skipped => "skipped",
            Status::Undecided => "undecided",
            Status::Found => "found",
            Status::Exhausted => "exhausted",
            Status::Timeout => "timeout",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    /// A document accepted by `verify-witness`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub replay: Option<Value>,
}

impl Entry {
    pub fn new(name: impl Into<String>, status: Status) -> Self {
        Self {
            name: name.into(),
            status,
            detail: None,
            witness: None,
            replay: None,
        }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn replay(mut self, r: Value) -> Self {
        self.replay = Some(r);
        self
    }
}

#[derive(Debug, Default)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs: Vec<Value>,
    pub results: Vec<Entry>,
    pub extra: Map<String, Value>,
    /// Free text printed after the results in human mode.
    pub trailer: Vec<String>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Self {
            command,
            ..Self::default()
        }
    }

    pub fn push(&mut self, e: Entry) {
        self.results.push(e);
    }

    pub fn set(&mut self, key: &str, v: Value) {
        self.extra.insert(key.to_string(), v);
    }

    pub fn to_json(&self, elapsed: Duration) -> Value {
        let mut doc = json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "elapsed_ms": elapsed.as_secs_f64() * 1e3,
        });
        let obj = doc.as_object_mut().expect("object");
        for (k, v) in &self.extra {
            obj.insert(k.clone(), v.clone());
        }
        doc
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for input in &self.inputs {
            let role = input["role"].as_str().unwrap_or("input");
            let path = input["path"].as_str().unwrap_or("-");
            let digest = input["digest"].as_str().unwrap_or("");
            out.push_str(&format!("{role}: {path} {digest}\n"));
        }
        let width = self.results.iter().map(|e| e.name.len()).max().unwrap_or(0);
        for e in &self.results {
            let line = match &e.detail {
                Some(d) => format!("{:width$}  {:9}  {d}", e.name, e.status.as_str(), width = width),
                None => format!("{:width$}  {}", e.name, e.status.as_str(), width = width),
            };
            out.push_str(&line);
            out.push('\n');
        }
        for line in &self.trailer {
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}
