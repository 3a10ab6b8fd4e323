//! Serializable verification reports.

use serde::{Deserialize, Serialize};

/// One named check over a degree range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    /// Inclusive degree range the check covers.
    pub degrees: (usize, usize),
    pub passed: bool,
    /// On failure, a relation (or other concrete object) escaping its target.
    pub witness: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<CheckRecord>,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), checks: Vec::new(), elapsed_ms: 0 }
    }

    pub fn pass(&mut self, name: impl Into<String>, degrees: (usize, usize), detail: impl Into<String>) {
        self.checks.push(CheckRecord { name: name.into(), degrees, passed: true, witness: None, detail: detail.into() });
    }

    pub fn fail(&mut self, name: impl Into<String>, degrees: (usize, usize), witness: Option<String>, detail: impl Into<String>) {
        self.checks.push(CheckRecord { name: name.into(), degrees, passed: false, witness, detail: detail.into() });
    }

    pub fn check(&mut self, name: impl Into<String>, degrees: (usize, usize), passed: bool, detail: impl Into<String>) {
        if passed {
            self.pass(name, degrees, detail);
        } else {
            self.fail(name, degrees, None, detail);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Append the checks of `other`, keeping the order stable.
    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.elapsed_ms += other.elapsed_ms;
    }

    /// Plain-text rendering, one line per check.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} [degrees {}..={}] {}\n", c.name, c.degrees.0, c.degrees.1, c.detail));
            if let Some(w) = &c.witness {
                out.push_str(&format!("     witness: {w}\n"));
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!("{} checks, {} failed, {} ms\n", self.checks.len(), failed, self.elapsed_ms));
        out
    }
}
