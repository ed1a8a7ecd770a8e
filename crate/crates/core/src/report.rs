//! Report envelopes shared by the command-line surface.
//!
//! Every command answers with the same envelope: the command name, an echo
//! of the parsed inputs, a command-specific result payload and the artifact
//! version. JSON output is deterministic (keys are sorted) and exact
//! rationals travel as `"p/q"` strings; the only floats are the explicitly
//! numeric series values, rounded to 12 significant digits.

use serde_json::{json, Map, Value};

/// Deterministic wrapper for machine-readable command output.
#[derive(Debug, Clone)]
pub struct ReportEnvelope {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub version: String,
}

impl ReportEnvelope {
    pub fn new(command: &str, inputs: Value, result: Value) -> ReportEnvelope {
        ReportEnvelope {
            command: command.to_string(),
            inputs,
            result,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn to_value(&self) -> Value {
        let mut map = Map::new();
        map.insert("command".to_string(), json!(self.command));
        map.insert("inputs".to_string(), self.inputs.clone());
        map.insert("result".to_string(), self.result.clone());
        map.insert("version".to_string(), json!(self.version));
        Value::Object(map)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("report values are plain JSON")
    }
}

/// Rounds to 12 significant digits so numeric output is byte-stable.
pub fn sig12(x: f64) -> f64 {
    format!("{x:.11e}").parse().expect("scientific round-trip")
}

/// A minimal pipe-table renderer for the markdown format.
pub fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&format!("| {} |\n", header.join(" | ")));
    out.push_str(&format!(
        "|{}\n",
        header.iter().map(|_| "---|").collect::<String>()
    ));
    for row in rows {
        out.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    out
}
