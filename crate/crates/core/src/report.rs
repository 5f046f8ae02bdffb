//! Verification reports, one JSON object per line.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportVerdict {
    Pass,
    Fail,
    NotApplicable,
}

/// The outcome of one operation on one subject. A failing report always
/// carries a witness.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub operation: String,
    pub verdict: ReportVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    pub stats: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub version: String,
}

impl VerificationReport {
    fn new(subject: &str, operation: &str, verdict: ReportVerdict, witness: Option<Value>) -> Self {
        VerificationReport {
            subject: subject.into(),
            operation: operation.into(),
            verdict,
            witness,
            stats: BTreeMap::new(),
            seed: None,
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }

    pub fn pass(subject: &str, operation: &str) -> Self {
        Self::new(subject, operation, ReportVerdict::Pass, None)
    }

    pub fn fail(subject: &str, operation: &str, witness: Value) -> Self {
        Self::new(subject, operation, ReportVerdict::Fail, Some(witness))
    }

    pub fn not_applicable(subject: &str, operation: &str) -> Self {
        Self::new(subject, operation, ReportVerdict::NotApplicable, None)
    }

    /// Attaches an optional witness to a passing report, such as the line
    /// that was found.
    pub fn with_witness(mut self, w: Value) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn stat(mut self, key: &str, value: impl Serialize) -> Self {
        self.stats.insert(key.into(), serde_json::to_value(value).expect("serializable stat"));
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// One line of NDJSON without the trailing newline.
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("serializable report")
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            ReportVerdict::Pass | ReportVerdict::NotApplicable => 0,
            ReportVerdict::Fail => 1,
        }
    }
}
