//! Structured pass/fail records produced by every check.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One instance of a claim: the two sides that must agree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub claim: String,
    pub left: String,
    pub right: String,
}

impl Witness {
    pub fn holds(&self) -> bool {
        self.left == self.right
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub check: String,
    pub params: BTreeMap<String, Value>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    /// Kept out of the JSON so identical runs serialize identically.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(|w| !w.holds())
    }

    pub fn summary(&self) -> String {
        let failed = self.failures().count();
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!(
            "{} [{}] {}: {} witnesses, {} failed, {:.3}s",
            match self.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            },
            params.join(" "),
            self.check,
            self.witnesses.len(),
            failed,
            self.wall_time.as_secs_f64()
        )
    }
}

/// Accumulates witnesses and stamps the elapsed time on [`finish`](Self::finish).
#[derive(Debug)]
pub struct ReportBuilder {
    check: String,
    params: BTreeMap<String, Value>,
    witnesses: Vec<Witness>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(check: impl Into<String>) -> Self {
        ReportBuilder {
            check: check.into(),
            params: BTreeMap::new(),
            witnesses: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn equal(&mut self, claim: impl Into<String>, left: impl Display, right: impl Display) {
        self.witnesses.push(Witness {
            claim: claim.into(),
            left: left.to_string(),
            right: right.to_string(),
        });
    }

    /// A boolean claim, recorded as `left = holds`, `right = true`.
    pub fn holds(&mut self, claim: impl Into<String>, holds: bool) {
        self.equal(claim, holds, true);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.witnesses.extend(other.witnesses);
    }

    pub fn finish(self) -> VerificationReport {
        let mut witnesses = self.witnesses;
        witnesses.sort();
        let status = if witnesses.iter().all(Witness::holds) {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            schema: SCHEMA_VERSION,
            check: self.check,
            params: self.params,
            status,
            witnesses,
            wall_time: self.started.elapsed(),
        }
    }
}
