use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Json,
}

/// Outcome of one CLI invocation.
///
/// Serializes with a fixed key order. A nonempty `counterexamples` list
/// means some check failed and maps to exit code 2.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: Vec<Value>,
    pub counterexamples: Vec<Value>,
    pub elapsed_ms: u64,
    /// Plain-format rendering, one line per entry.
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_owned(),
            parameters: BTreeMap::new(),
            results: Vec::new(),
            counterexamples: Vec::new(),
            elapsed_ms: 0,
            lines: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.parameters.insert(key.to_owned(), value.into());
        self
    }

    pub fn exit_code(&self) -> u8 {
        if self.counterexamples.is_empty() {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports contain only JSON values")
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = match format {
            Format::Json => self.to_json(),
            Format::Plain => self.lines.join("\n"),
        };
        if !out.is_empty() {
            out.push('\n');
        }
        out
    }
}
