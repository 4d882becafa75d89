//! Text and JSON rendering of verification reports.

use serde::Serialize;
use uhosp_core::report::Check;

use crate::suites::{Settings, SuiteRun};

pub const SCHEMA_ID: &str = "uhosp-report/1";

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub check_id: String,
    pub status: &'static str,
    pub residual: String,
    pub order: usize,
    pub degree: Option<usize>,
    /// Wall time of the suite that produced the check.
    pub ms: u64,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq, Default)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub info: usize,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub schema: &'static str,
    pub suites: Vec<&'static str>,
    pub order: usize,
    pub degree: usize,
    pub map: &'static str,
    pub seed: u64,
    pub checks: Vec<CheckEntry>,
    pub summary: Summary,
}

impl Report {
    /// Flattens suite runs; entries are ordered by check id.
    pub fn new(runs: &[SuiteRun], s: &Settings) -> Self {
        let mut checks: Vec<CheckEntry> =
            runs.iter().flat_map(|r| r.checks.iter().map(move |c| entry(c, r.ms))).collect();
        checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                "pass" => summary.pass += 1,
                "fail" => summary.fail += 1,
                _ => summary.info += 1,
            }
        }
        Report {
            schema: SCHEMA_ID,
            suites: runs.iter().map(|r| r.suite.name()).collect(),
            order: s.order,
            degree: s.degree,
            map: s.maps.name(),
            seed: s.seed,
            checks,
            summary,
        }
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<4}  {}\n", c.status.to_uppercase(), c.check_id));
            if !c.residual.is_empty() {
                out.push_str(&format!("      {}\n", c.residual));
            }
        }
        out.push_str(&format!(
            "{} pass, {} fail, {} info (order {}, degree {}, map {}, seed {})\n",
            self.summary.pass,
            self.summary.fail,
            self.summary.info,
            self.order,
            self.degree,
            self.map,
            self.seed
        ));
        out
    }
}

fn entry(c: &Check, ms: u64) -> CheckEntry {
    CheckEntry {
        check_id: c.id.clone(),
        status: c.status.as_str(),
        residual: c.residual.clone(),
        order: c.order,
        degree: c.degree,
        ms,
    }
}
