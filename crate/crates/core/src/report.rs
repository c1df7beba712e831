//! Pass/fail reports produced by the verification sweeps.

use alloc::string::String;
use alloc::vec::Vec;

/// Result of one coherence or consistency sweep.
///
/// `params` records the sweep bounds or labels, `failures` one line per
/// offending label tuple. Sweeps append failures in sorted label order, so
/// reports are deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: &'static str,
    pub params: Vec<i64>,
    pub pass: bool,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn new(check: &'static str, params: Vec<i64>) -> Self {
        CheckReport { check, params, pass: true, failures: Vec::new() }
    }

    pub fn fail(&mut self, msg: String) {
        self.pass = false;
        self.failures.push(msg);
    }

    /// Merges another report into this one, keeping this report's name.
    pub fn absorb(&mut self, other: CheckReport) {
        self.pass &= other.pass;
        self.failures.extend(other.failures);
    }
}
