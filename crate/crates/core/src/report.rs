//! Check results shared by every verification suite.

use alloc::string::{String, ToString};
use core::fmt::Display;

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Status {
    Pass,
    Fail,
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        }
    }
}

/// One verified identity. `residual` is empty on a pass.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub residual: String,
    pub order: usize,
    pub degree: Option<usize>,
}

impl Check {
    /// Pass iff `is_zero`; otherwise the printed residual is kept.
    pub fn residual<R: Display>(id: impl Into<String>, order: usize, is_zero: bool, r: &R) -> Self {
        Check {
            id: id.into(),
            status: if is_zero { Status::Pass } else { Status::Fail },
            residual: if is_zero { String::new() } else { r.to_string() },
            order,
            degree: None,
        }
    }

    pub fn pass(id: impl Into<String>, order: usize) -> Self {
        Check { id: id.into(), status: Status::Pass, residual: String::new(), order, degree: None }
    }

    pub fn fail(id: impl Into<String>, order: usize, why: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Fail, residual: why.into(), order, degree: None }
    }

    pub fn info(id: impl Into<String>, order: usize, note: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Info, residual: note.into(), order, degree: None }
    }

    pub fn with_degree(mut self, degree: usize) -> Self {
        self.degree = Some(degree);
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Sorts by id, the order reports are printed in.
pub fn sort_checks(checks: &mut [Check]) {
    checks.sort_by(|a, b| a.id.cmp(&b.id));
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}
