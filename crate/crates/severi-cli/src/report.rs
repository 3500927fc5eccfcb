//! Run configuration and machine-readable verification reports.
//!
//! Reports render to a single structured text document with stable key
//! ordering, so identical configurations produce byte-identical output.
//! Wall-clock timing is deliberately kept out of the document (it goes to
//! stderr) to preserve that determinism.

use std::fmt::Write as _;

/// Knobs shared by every verification run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub seed: u64,
    pub trials: u32,
    pub bound: i64,
    pub retries: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 42,
            trials: 200,
            bound: 10,
            retries: 64,
        }
    }
}

/// A reproducible failure record: the keyed stream is fully determined by
/// `(suite, section, check, trial)` plus the seed, so `inputs` is advisory.
#[derive(Debug, Clone)]
pub struct Failure {
    pub trial: u32,
    pub inputs: String,
    pub note: String,
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub id: &'static str,
    pub attempted: u32,
    pub passed: u32,
    pub failures: Vec<Failure>,
}

impl CheckResult {
    pub fn passed_all(&self) -> bool {
        self.passed == self.attempted && self.failures.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct Section {
    /// Model name or another section label (for example "composition").
    pub label: String,
    pub checks: Vec<CheckResult>,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub suite: &'static str,
    pub config: RunConfig,
    pub sections: Vec<Section>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.sections
            .iter()
            .all(|s| s.checks.iter().all(CheckResult::passed_all))
    }

    pub fn counts(&self) -> (usize, usize) {
        let total = self.sections.iter().map(|s| s.checks.len()).sum();
        let passed = self
            .sections
            .iter()
            .map(|s| s.checks.iter().filter(|c| c.passed_all()).count())
            .sum();
        (passed, total)
    }

    /// The canonical text document.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "report: {}", self.suite);
        let _ = writeln!(out, "seed: {}", self.config.seed);
        let _ = writeln!(out, "trials: {}", self.config.trials);
        let _ = writeln!(out, "bound: {}", self.config.bound);
        let _ = writeln!(out, "retries: {}", self.config.retries);
        for section in &self.sections {
            let _ = writeln!(out, "section: {}", section.label);
            for check in &section.checks {
                let _ = writeln!(out, "  check: {}", check.id);
                let _ = writeln!(out, "    attempted: {}", check.attempted);
                let _ = writeln!(out, "    passed: {}", check.passed);
                let _ = writeln!(
                    out,
                    "    status: {}",
                    if check.passed_all() { "pass" } else { "fail" }
                );
                for f in &check.failures {
                    let _ = writeln!(out, "    failure: trial {}", f.trial);
                    let _ = writeln!(out, "      inputs: {}", f.inputs);
                    let _ = writeln!(out, "      note: {}", f.note);
                }
            }
        }
        let (passed, total) = self.counts();
        let _ = writeln!(out, "checks-passed: {passed}/{total}");
        let _ = writeln!(
            out,
            "summary: {}",
            if self.all_passed() { "pass" } else { "fail" }
        );
        out
    }
}
