use std::collections::BTreeMap;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::{json, Value};

pub const REPORT_FORMAT: &str = "amc-report/1";

#[derive(Serialize)]
struct Assertion {
    name: String,
    ok: bool,
    source: String,
}

/// One report per run. Every numeric result carries the formula or oracle
/// that produced it.
pub struct Report {
    command: String,
    inputs: BTreeMap<String, Value>,
    results: BTreeMap<String, Value>,
    assertions: Vec<Assertion>,
    notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.into(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            assertions: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Serialize) {
        self.inputs.insert(key.into(), json!(value));
    }

    /// A computed quantity and where it came from.
    pub fn result(&mut self, key: &str, value: impl Serialize, source: &str) {
        self.results.insert(key.into(), json!({ "value": value, "source": source }));
    }

    pub fn check(&mut self, name: &str, ok: bool, source: &str) {
        self.assertions.push(Assertion { name: name.into(), ok, source: source.into() });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.ok)
    }

    pub fn render(&self, deterministic: bool) -> String {
        let mut doc = json!({
            "format": REPORT_FORMAT,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "assertions": self.assertions,
            "notes": self.notes,
            "status": if self.passed() { "pass" } else { "fail" },
        });
        if !deterministic {
            let secs = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
            doc["timestamp"] = json!(secs);
        }
        amc_core::io::to_canonical_json(&doc)
    }
}
