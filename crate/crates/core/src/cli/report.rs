//! Report assembly and rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    Inconclusive,
    FailedHypothesis,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Inconclusive => "inconclusive",
            Status::FailedHypothesis => "failed-hypothesis",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Inconclusive => 2,
            Status::FailedHypothesis => 3,
            Status::Error => 4,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TaskReport {
    pub index: usize,
    pub line: usize,
    pub op: String,
    pub args: Vec<String>,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportOptions {
    pub characteristic: Option<u32>,
    pub max_t_degree: usize,
    pub max_x_degree: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub version: String,
    pub schema: u32,
    pub session_hash: String,
    pub options: ReportOptions,
    pub tasks: Vec<TaskReport>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl Report {
    /// Worst status over all tasks.
    pub fn status(&self) -> Status {
        self.tasks.iter().map(|t| t.status).max().unwrap_or(Status::Ok)
    }

    pub fn exit_code(&self) -> i32 {
        self.status().exit_code()
    }

    /// The report with every timing zeroed, for byte comparisons.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        for t in &mut r.tasks {
            t.elapsed_ms = 0.0;
        }
        r
    }
}

pub fn session_hash(source: &str, options: &ReportOptions) -> String {
    let mut h = Sha256::new();
    h.update(source.as_bytes());
    h.update(serde_json::to_vec(options).expect("options serialize"));
    hex::encode(h.finalize())
}

pub fn emit_report(r: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(r).expect("report serializes");
            out.push(b'\n');
            out
        }
        Format::Text => render_text(r).into_bytes(),
    }
}

fn render_text(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "modcore {} (schema {}) session {}", r.version, r.schema, &r.session_hash[..12]);
    for t in &r.tasks {
        let _ = writeln!(
            s,
            "[{}] line {}: {} {} -> {} ({:.1} ms)",
            t.index,
            t.line,
            t.op,
            t.args.join(" "),
            t.status.as_str(),
            t.elapsed_ms
        );
        if !t.params.is_empty() {
            let p: Vec<String> = t.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(s, "    params: {}", p.join(" "));
        }
        if let Some(e) = &t.error {
            let _ = writeln!(s, "    error: {e}");
        }
        if let Some(v) = &t.value {
            let body = match v {
                Value::Object(_) | Value::Array(_) => serde_json::to_string_pretty(v).unwrap(),
                other => other.to_string(),
            };
            for line in body.lines() {
                let _ = writeln!(s, "    {line}");
            }
        }
    }
    let _ = writeln!(s, "overall: {}", r.status().as_str());
    s
}
