//! Pass/fail reports for axiom and identity sweeps.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Labels of the basis elements (or tuples) where the identity failed.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failed_at: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records a check from its list of failures; an empty list is a pass.
    pub fn record(&mut self, name: &str, failed_at: Vec<String>) {
        self.checks.push(Check { name: name.to_string(), passed: failed_at.is_empty(), failed_at });
    }

    pub fn record_bool(&mut self, name: &str, passed: bool, witness: &str) {
        let failed_at = if passed { vec![] } else { vec![witness.to_string()] };
        self.checks.push(Check { name: name.to_string(), passed, failed_at });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }
}
