//! Verification reports shared by all suites.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

/// Outcome of one checked case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub case_id: String,
    pub relation_id: String,
    pub parameters: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CaseResult {
    pub fn new(relation_id: &str, parameters: String, passed: bool, witness: Option<String>) -> Self {
        let case_id = alloc::format!("{relation_id}@{parameters}");
        CaseResult { case_id, relation_id: relation_id.into(), parameters, passed, witness }
    }

    pub fn check(relation_id: &str, parameters: String, ok: bool) -> Self {
        Self::new(relation_id, parameters, ok, None)
    }
}

/// A deterministic list of case results plus counts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub version: String,
    pub cases: Vec<CaseResult>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn new(suite: &str, mut cases: Vec<CaseResult>) -> Self {
        cases.sort_by(|a, b| a.case_id.cmp(&b.case_id));
        let passed = cases.iter().filter(|c| c.passed).count();
        let failed = cases.len() - passed;
        Report { suite: suite.into(), version: env!("CARGO_PKG_VERSION").into(), cases, passed, failed }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed)
    }

    /// Merge several reports into one, keeping case order deterministic.
    pub fn merge(suite: &str, parts: Vec<Report>) -> Self {
        Report::new(suite, parts.into_iter().flat_map(|r| r.cases).collect())
    }
}
