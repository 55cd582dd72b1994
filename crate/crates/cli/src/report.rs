//! Run reports: named check outcomes with PASS/FAIL/WARN status, a
//! deterministic JSON rendering, and the exit-code rule (0 iff no FAIL,
//! 2 reserved for usage errors).
//!
//! Standard output is byte-deterministic for fixed inputs; wall-clock
//! timing goes to standard error only.

use std::io::Write;
use std::path::Path;
use std::time::Instant;

use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Warn,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Warn => "WARN",
        }
    }
}

pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub payload: Value,
}

pub struct RunReport {
    command: String,
    inputs: Value,
    results: Vec<CheckResult>,
    started: Instant,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value) -> Self {
        RunReport {
            command: command.to_string(),
            inputs,
            results: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn add(&mut self, name: &str, status: Status, payload: Value) {
        self.results.push(CheckResult {
            name: name.to_string(),
            status,
            payload,
        });
    }

    pub fn check(&mut self, name: &str, ok: bool, payload: Value) {
        self.add(name, if ok { Status::Pass } else { Status::Fail }, payload);
    }

    pub fn warn_unless(&mut self, name: &str, ok: bool, payload: Value) {
        self.add(name, if ok { Status::Pass } else { Status::Warn }, payload);
    }

    pub fn has_failure(&self) -> bool {
        self.results.iter().any(|r| r.status == Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results.iter().map(|r| json!({
                "name": r.name,
                "status": r.status.label(),
                "payload": r.payload,
            })).collect::<Vec<_>>(),
        })
    }

    /// Print the outcome table, write the JSON file if requested
    /// (`json_override` substitutes a pinned schema for the whole file),
    /// and return the process exit code.
    pub fn finish(self, json_path: Option<&Path>, json_override: Option<Value>) -> i32 {
        for r in &self.results {
            println!("[{}] {}", r.status.label(), r.name);
        }
        let failed = self.has_failure();
        let warned = self.results.iter().filter(|r| r.status == Status::Warn).count();
        let passed = self.results.iter().filter(|r| r.status == Status::Pass).count();
        println!(
            "{}: {} ({passed} passed, {warned} warnings, {} checks)",
            self.command,
            if failed { "FAIL" } else { "PASS" },
            self.results.len()
        );
        let _ = writeln!(
            std::io::stderr(),
            "elapsed: {:.3}s",
            self.started.elapsed().as_secs_f64()
        );
        if let Some(path) = json_path {
            let doc = json_override.unwrap_or_else(|| self.to_json());
            let body = serde_json::to_string_pretty(&doc).expect("report serialization");
            if let Err(e) = std::fs::write(path, body + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        if failed {
            1
        } else {
            0
        }
    }
}
