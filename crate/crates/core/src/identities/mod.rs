//! Registry of executable identity checks.
//!
//! Each check compares two independent computations of the same objects (an
//! enumeration against a recurrence, a pair system against a single
//! recurrence, a closed form against a table) for every `n` up to a budget.
//! Checks are pure, so the suite fans them out over the thread pool and
//! reports in registry order.

mod checks;

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};

pub use checks::registry;

/// What a check leans on, which also decides its default budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backing {
    /// Brute-force enumeration on at least one side.
    Enumeration,
    /// Recurrences and polynomial algebra only.
    Recurrence,
    /// Root isolation, interlacing or stability.
    Analysis,
    /// Truncated series tables.
    Series,
}

impl Backing {
    pub fn as_str(self) -> &'static str {
        match self {
            Backing::Enumeration => "enum",
            Backing::Recurrence => "recurrence",
            Backing::Analysis => "analysis",
            Backing::Series => "series",
        }
    }
}

/// How a check failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Two computations of the same object disagree at `n`.
    Mismatch { n: usize, what: String, lhs: String, rhs: String },
    /// A structural property fails at `n`.
    Property { n: usize, what: String },
    /// A computation errored.
    Error(String),
}

impl Failure {
    pub(crate) fn mismatch(n: usize, what: &str, lhs: impl fmt::Display, rhs: impl fmt::Display) -> Failure {
        Failure::Mismatch { n, what: what.to_string(), lhs: lhs.to_string(), rhs: rhs.to_string() }
    }

    pub(crate) fn property(n: usize, what: impl Into<String>) -> Failure {
        Failure::Property { n, what: what.into() }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Failure::Mismatch { n, what, lhs, rhs } => json!({ "n": n, "what": what, "lhs": lhs, "rhs": rhs }),
            Failure::Property { n, what } => json!({ "n": n, "what": what }),
            Failure::Error(message) => json!({ "error": message }),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Mismatch { n, what, lhs, rhs } => write!(f, "n = {n}: {what}: {lhs} != {rhs}"),
            Failure::Property { n, what } => write!(f, "n = {n}: {what}"),
            Failure::Error(message) => write!(f, "error: {message}"),
        }
    }
}

pub(crate) type Runner = fn(usize) -> Result<Option<Failure>>;

pub struct IdentityCheck {
    pub name: &'static str,
    pub backing: Backing,
    pub default_n: usize,
    pub description: &'static str,
    pub(crate) runner: Runner,
}

impl fmt::Debug for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityCheck")
            .field("name", &self.name)
            .field("backing", &self.backing)
            .field("default_n", &self.default_n)
            .finish()
    }
}

impl IdentityCheck {
    pub fn run(&self, n_max: usize) -> CheckReport {
        let failure = match (self.runner)(n_max) {
            Ok(f) => f,
            Err(e) => Some(Failure::Error(e.to_string())),
        };
        CheckReport { name: self.name, n_max, failure }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub n_max: usize,
    pub failure: Option<Failure>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// `NAME n≤K PASS` or `NAME n≤K FAIL`.
    pub fn line(&self) -> String {
        format!("{} n≤{} {}", self.name, self.n_max, if self.passed() { "PASS" } else { "FAIL" })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "n_max": self.n_max,
            "passed": self.passed(),
            "witness": self.failure.as_ref().map(Failure::to_json),
        })
    }
}

pub fn lookup(name: &str) -> Result<&'static IdentityCheck> {
    registry()
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

pub fn verify(name: &str, n_max: usize) -> Result<CheckReport> {
    Ok(lookup(name)?.run(n_max))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub reports: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(CheckReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.reports.iter().filter(|r| !r.passed())
    }

    pub fn lines(&self) -> Vec<String> {
        self.reports.iter().map(CheckReport::line).collect()
    }

    pub fn to_json(&self) -> Value {
        let passed = self.reports.iter().filter(|r| r.passed()).count();
        json!({
            "total": self.reports.len(),
            "passed": passed,
            "failed": self.reports.len() - passed,
            "checks": self.reports.iter().map(CheckReport::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Runs every registered check, at its default budget unless `budgets`
/// overrides it. Unknown names in `budgets` are an error.
pub fn verify_all(budgets: &BTreeMap<String, usize>) -> Result<SuiteReport> {
    if let Some(unknown) = budgets.keys().find(|k| lookup(k).is_err()) {
        return Err(Error::UnknownName(unknown.clone()));
    }
    let reports = crate::par::map_ordered(registry(), |check| {
        check.run(budgets.get(check.name).copied().unwrap_or(check.default_n))
    });
    Ok(SuiteReport { reports })
}
