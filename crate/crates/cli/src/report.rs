//! The structured report: one JSON document with a config echo and an array
//! of claim records sorted by id. Values are integers, strings (rationals as
//! `a/b`) or booleans; floats never occur.

use serde::Serialize;
use serde_json::Value;

/// How the expected value of a claim was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Quoted from the mathematical source.
    Stated,
    /// Computed independently of the value under test.
    Computed,
    /// Holds by construction.
    Structural,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub id: String,
    /// The statement being checked, or `plumbing`.
    pub anchor: String,
    pub computed: Value,
    pub expected: Value,
    pub provenance: Provenance,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub suite: String,
    pub cases: Vec<String>,
    /// Resolved job prefixes, in run order.
    pub jobs: Vec<String>,
    pub field: String,
    pub max_n: usize,
    pub cache_dir: Option<String>,
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub claims: usize,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub config: ConfigEcho,
    pub claims: Vec<Claim>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: ConfigEcho, mut claims: Vec<Claim>) -> Self {
        claims.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = claims.iter().filter(|c| c.pass).count();
        let summary =
            Summary { claims: claims.len(), passed, failed: claims.len() - passed, pass: passed == claims.len() };
        Report {
            tool: env!("CARGO_PKG_NAME").into(),
            version: env!("CARGO_PKG_VERSION").into(),
            config,
            claims,
            summary,
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}
