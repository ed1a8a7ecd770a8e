//! End-to-end checks of the command-line surface: exit codes, byte-level
//! determinism, and validation of every JSON envelope against the shipped
//! schema (`schema/report.schema.json`), interpreted by the small validator
//! below.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jordan-eisenstein"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

// ---------------------------------------------------------------------------
// A small JSON-Schema interpreter covering the subset the shipped schema
// uses: type, required, properties, items, enum, const, oneOf, pattern
// (the rational-string pattern only).

const RATIONAL_PATTERN: &str = "^-?[0-9]+(/[0-9]+)?$";

fn is_rational_string(s: &str) -> bool {
    jordan_eisenstein::rational::parse_rat(s).is_some() && !s.contains(' ')
}

fn validate(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(c) = schema.get("const") {
        if value != c {
            return Err(format!("{path}: expected const {c}, got {value}"));
        }
    }
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(value) {
            return Err(format!("{path}: {value} not in enum"));
        }
    }
    if let Some(ty) = schema.get("type").and_then(Value::as_str) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            other => return Err(format!("{path}: unsupported type {other}")),
        };
        if !ok {
            return Err(format!("{path}: expected {ty}, got {value}"));
        }
    }
    if let Some(pattern) = schema.get("pattern").and_then(Value::as_str) {
        let s = value
            .as_str()
            .ok_or_else(|| format!("{path}: pattern on non-string"))?;
        assert_eq!(
            pattern, RATIONAL_PATTERN,
            "only the rational pattern is used"
        );
        if !is_rational_string(s) {
            return Err(format!("{path}: {s:?} is not a rational string"));
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        for key in required {
            let key = key.as_str().expect("required keys are strings");
            if value.get(key).is_none() {
                return Err(format!("{path}: missing required key {key:?}"));
            }
        }
    }
    if let Some(props) = schema.get("properties").and_then(Value::as_object) {
        for (key, sub) in props {
            if let Some(v) = value.get(key) {
                validate(sub, v, &format!("{path}.{key}"))?;
            }
        }
    }
    if let Some(items) = schema.get("items") {
        if let Some(array) = value.as_array() {
            for (i, v) in array.iter().enumerate() {
                validate(items, v, &format!("{path}[{i}]"))?;
            }
        }
    }
    if let Some(branches) = schema.get("oneOf").and_then(Value::as_array) {
        let matches = branches
            .iter()
            .filter(|b| validate(b, value, path).is_ok())
            .count();
        if matches != 1 {
            return Err(format!("{path}: {matches} oneOf branches matched"));
        }
    }
    Ok(())
}

fn schema() -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    let text = std::fs::read_to_string(&path).expect("schema ships with the crate");
    serde_json::from_str(&text).expect("schema is valid JSON")
}

#[test]
fn every_command_emits_schema_valid_json() {
    let schema = schema();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["classify", "E", "7"],
        vec!["classify", "A", "1"],
        vec!["classify", "D", "6"],
        vec!["tower", "E", "7"],
        vec!["tower", "C", "4"],
        vec!["cfun", "A", "3"],
        vec!["cfun", "E", "7", "--method", "closed"],
        vec!["cfun", "C", "2"],
        vec!["cfun", "--quaternionic", "r=2"],
        vec!["reducibility", "r=3", "d=8", "--verify"],
        vec!["reducibility", "r=2", "d=5", "--chi-d", "undefined"],
        vec!["poles", "r=3", "d=8"],
        vec!["poles", "r=1", "d=0"],
        vec!["pyramid", "r=3", "i=1"],
        vec!["series", "q=3", "s=2"],
    ];
    for args in invocations {
        let value = run_json(&args);
        validate(&schema, &value, "$").unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["--format", "json", "poles", "r=3", "d=8"],
        vec!["--format", "md", "classify", "D", "6"],
        vec!["--format", "json", "cfun", "E", "7"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?} is not deterministic");
    }
}

#[test]
fn classify_rows_match_the_table() {
    let v = run_json(&["classify", "E", "7"]);
    assert_eq!(v["result"]["rows"][0]["dim_n"], 27);
    assert_eq!(v["result"]["rows"][0]["r"], 3);
    assert_eq!(v["result"]["rows"][0]["d"], 8);
    assert_eq!(v["result"]["rows"][0]["levi"], "E6");
    assert_eq!(v["result"]["rows"][0]["kind"], "composition_algebra");

    let v = run_json(&["classify", "C", "4"]);
    assert_eq!(v["result"]["rows"][0]["dim_n"], 10);
    assert_eq!(v["result"]["rows"][0]["r"], 4);
    assert_eq!(v["result"]["rows"][0]["d"], 1);
    assert_eq!(v["result"]["rows"][0]["levi"], "A3");

    let v = run_json(&["classify", "A", "1"]);
    assert_eq!(v["result"]["rows"][0]["dim_n"], 1);
    assert_eq!(v["result"]["rows"][0]["r"], 1);
}

#[test]
fn tower_steps_match_the_table() {
    let v = run_json(&["tower", "E", "7"]);
    let steps = v["result"]["steps"].as_array().unwrap();
    let labels: Vec<&str> = steps.iter().map(|s| s["type"].as_str().unwrap()).collect();
    assert_eq!(labels, vec!["E7", "D6", "A1"]);
    assert_eq!(steps[1]["levi"], "D5");
}

#[test]
fn cfun_reports_the_verdict() {
    let v = run_json(&["cfun", "A", "3"]);
    assert_eq!(v["result"]["verdict"], "gk == closed: true");
    assert_eq!(
        v["result"]["methods"]["closed"],
        "Z(s-1)*Z(s)/(Z(s+1)*Z(s+2))"
    );
    let v = run_json(&["cfun", "E", "7", "--method", "closed"]);
    assert_eq!(
        v["result"]["methods"]["closed"],
        "Z(s-8)*Z(s-4)*Z(s)/(Z(s+1)*Z(s+5)*Z(s+9))"
    );
    // Non-simply-laced types carry the scope note.
    let v = run_json(&["cfun", "C", "2"]);
    assert!(v["result"]["scope_note"].as_str().is_some());

    // Quaternionic r = 2: poles at 0, 2 and zeros at -3, 1.
    let v = run_json(&["cfun", "--quaternionic", "r=2"]);
    assert_eq!(v["result"]["verdict"], "closed == restricted: true");
    let ledger = v["result"]["ledger"].as_array().unwrap();
    let entries: Vec<(&str, i64)> = ledger
        .iter()
        .map(|e| {
            (
                e["location"].as_str().unwrap(),
                e["order"].as_i64().unwrap(),
            )
        })
        .collect();
    assert_eq!(entries, vec![("-3", -1), ("0", 1), ("1", -1), ("2", 1)]);
}

#[test]
fn poles_report_matches_the_ledger() {
    let v = run_json(&["poles", "r=3", "d=8"]);
    let poles = v["result"]["poles"].as_array().unwrap();
    let s0: Vec<&str> = poles.iter().map(|p| p["s0"].as_str().unwrap()).collect();
    assert_eq!(s0, vec!["1", "5", "9"]);
    assert!(poles.iter().all(|p| p["order"] == 1));
    assert_eq!(poles[2]["residue"], "trivial_representation");
}

#[test]
fn exit_codes() {
    // 2: usage / malformed input.
    let out = run(&["classify", "Q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["series", "q=6", "s=1"]); // 6 is not a prime power
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["pyramid", "r=3", "i=9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["series", "q=2", "s=0"]); // divergent
    assert_eq!(out.status.code(), Some(2));

    // 2: several qualifying nodes need an explicit --node.
    let out = run(&["tower", "D", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--node"));

    // 3: out-of-scope refusal, with the reason on stderr.
    let out = run(&["poles", "r=2", "d=2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("divisible by 4"));
    let out = run(&["reducibility", "r=3", "d=4", "--chi-d", "quadratic-field"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["reducibility", "r=2", "d=2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["cfun", "A", "3", "--method", "restricted"]); // d = 2, not 4
    assert_eq!(out.status.code(), Some(3));

    // 0: success.
    let out = run(&["classify", "B", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["tower", "D", "4", "--node", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn markdown_mode_renders_tables() {
    let out = run(&["classify", "E", "7"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("| node | m^der | dim N | r | d |"));
    assert!(text.contains("| 7 | E6 | 27 | 3 | 8 |"));
}
