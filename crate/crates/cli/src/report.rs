//! JSON report schema.
//!
//! Reports are byte-identical across runs with the same fixtures, bounds and
//! tool version; wall-clock timings are only filled in when explicitly
//! requested.

use serde::Serialize;
use sha2::{Digest, Sha256};
use twoact_core::check::Check;
use twoact_core::Bounds;

#[derive(Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Serialize)]
pub struct BoundsOut {
    pub max_group_order: usize,
    pub max_g1_order: usize,
    pub max_space_objects: usize,
    pub max_space_arrows: usize,
    pub max_enum_candidates: usize,
}

#[derive(Serialize)]
pub struct CheckOut {
    pub name: String,
    pub anchor: String,
    pub pass: bool,
    pub witness: Option<String>,
    pub timing_ms: Option<u64>,
}

#[derive(Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Serialize)]
pub struct Report {
    pub tool: Tool,
    pub command: String,
    pub fixture_digest: String,
    pub bounds: BoundsOut,
    pub checks: Vec<CheckOut>,
    pub summary: Summary,
}

pub fn fixture_digest(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    format!("sha256:{:x}", hasher.finalize())
}

pub fn build(
    command: &str,
    digest: String,
    bounds: &Bounds,
    checks: Vec<Check>,
    timings: Option<Vec<u64>>,
) -> Report {
    let passed = checks.iter().filter(|c| c.pass).count();
    let total = checks.len();
    let checks_out = checks
        .into_iter()
        .enumerate()
        .map(|(i, c)| CheckOut {
            name: c.name,
            anchor: c.anchor,
            pass: c.pass,
            witness: c.witness,
            timing_ms: timings.as_ref().and_then(|t| t.get(i).copied()),
        })
        .collect();
    Report {
        tool: Tool { name: "twoact", version: env!("CARGO_PKG_VERSION") },
        command: command.to_string(),
        fixture_digest: digest,
        bounds: BoundsOut {
            max_group_order: bounds.max_group_order,
            max_g1_order: bounds.max_g1_order,
            max_space_objects: bounds.max_space_objects,
            max_space_arrows: bounds.max_space_arrows,
            max_enum_candidates: bounds.max_enum_candidates,
        },
        checks: checks_out,
        summary: Summary { total, passed, failed: total - passed },
    }
}

pub fn render(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}
