//! Machine-readable verification reports.
//!
//! Reports are serialised as pretty-printed JSON with sorted keys so that
//! identical runs produce byte-identical output.  Wall-clock timings are
//! deliberately kept out of the JSON (they go to stderr) for the same
//! reason.

use serde::Serialize;

/// One failed check inside a suite.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    /// The per-trial seed that reproduces this failure.
    pub seed: u64,
    /// What was being checked, prefixed with the algebra it ran on.
    pub description: String,
    /// The observed violation magnitude.
    pub magnitude: f64,
}

/// The outcome of one property suite.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub trials: usize,
    /// The pass threshold the violations were compared against.
    pub threshold: f64,
    /// Largest finite violation observed across all checks.
    pub max_violation: f64,
    pub failures: Vec<Failure>,
    pub passed: bool,
    /// Wall-clock seconds; reported on stderr, never serialised.
    #[serde(skip)]
    pub elapsed: f64,
}

/// The aggregate of a `verify` run.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: usize,
    pub tolerance: f64,
    pub algebras: Vec<String>,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn new(
        seed: u64,
        trials: usize,
        tolerance: f64,
        algebras: Vec<String>,
        suites: Vec<SuiteReport>,
    ) -> Self {
        let passed = suites.iter().all(|s| s.passed);
        VerifyReport {
            seed,
            trials,
            tolerance,
            algebras,
            suites,
            passed,
        }
    }

    /// Pretty JSON with sorted keys (stable bytes for identical runs).
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("reports contain only finite numbers");
        serde_json::to_string_pretty(&value).expect("serialising a Value cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_is_sorted_and_skips_elapsed() {
        let report = VerifyReport::new(
            42,
            10,
            1e-9,
            vec!["sym(2)".to_owned()],
            vec![SuiteReport {
                name: "demo".to_owned(),
                trials: 10,
                threshold: 1e-9,
                max_violation: 3.5e-12,
                failures: vec![],
                passed: true,
                elapsed: 0.25,
            }],
        );
        let text = report.to_json();
        assert!(!text.contains("elapsed"));
        let algebras_at = text.find("\"algebras\"").unwrap();
        let passed_at = text.find("\"passed\"").unwrap();
        let seed_at = text.find("\"seed\"").unwrap();
        assert!(algebras_at < passed_at && passed_at < seed_at);
        // Identical construction yields identical bytes.
        assert_eq!(text, report.to_json());
    }
}
