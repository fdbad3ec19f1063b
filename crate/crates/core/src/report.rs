//! Suite results and their text and JSON renderings.

use std::fmt::Write;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::check::{Check, Residual, Status};

pub const ENGINE_VERSION: &str = concat!("defshadow ", env!("CARGO_PKG_VERSION"));

/// `sha256:<hex>` of a canonical document.
pub fn digest(canonical: &str) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(canonical.as_bytes())))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entry {
    pub id: String,
    pub part: String,
    pub status: Status,
    pub residual: Option<Residual>,
    pub note: Option<String>,
    /// Wall time of the part that produced the check; only with timings on.
    pub elapsed_ms: Option<f64>,
}

impl Entry {
    pub fn new(part: &str, c: Check, elapsed_ms: Option<f64>) -> Self {
        Entry {
            id: c.id,
            part: part.to_string(),
            status: c.status,
            residual: c.residual,
            note: c.note,
            elapsed_ms,
        }
    }
}

/// Field order here is the key order of the JSON rendering.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub target: String,
    pub status: Status,
    pub engine_version: String,
    pub input_digest: String,
    pub checks: Vec<Entry>,
}

impl Report {
    pub fn new(suite: &str, target: &str, input_digest: String, checks: Vec<Entry>) -> Self {
        let status = if checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else {
            Status::Pass
        };
        Report {
            suite: suite.to_string(),
            target: target.to_string(),
            status,
            engine_version: ENGINE_VERSION.to_string(),
            input_digest,
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} on {}", self.suite, self.target);
        let _ = writeln!(out, "engine {}, input {}", self.engine_version, self.input_digest);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::NotApplicable => "n/a ",
            };
            let _ = write!(out, "{tag}  {:<12} {}", c.part, c.id);
            if let Some(ms) = c.elapsed_ms {
                let _ = write!(out, "  ({ms:.1} ms)");
            }
            if let Some(n) = &c.note {
                let _ = write!(out, "  [{n}]");
            }
            out.push('\n');
            if let Some(r) = &c.residual {
                let _ = writeln!(out, "      residual ({} terms): {}", r.terms, r.text);
            }
        }
        let _ = writeln!(
            out,
            "{}: {} passed, {} failed, {} not applicable",
            if self.passed() { "PASS" } else { "FAIL" },
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::NotApplicable)
        );
        out
    }
}
