//! Verification results and their text, JSON and CSV renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::numkernel::PrecisionConfig;

/// One verified identity: two independently computed sides and their gap.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub tol: f64,
    pub pass: bool,
    /// The identity being checked, written out as a formula.
    pub identity: String,
}

impl CheckResult {
    pub fn new(
        name: impl Into<String>,
        lhs: f64,
        rhs: f64,
        tol: f64,
        identity: impl Into<String>,
    ) -> Self {
        let abs_err = (lhs - rhs).abs();
        CheckResult {
            name: name.into(),
            lhs,
            rhs,
            abs_err,
            tol,
            pass: abs_err <= tol,
            identity: identity.into(),
        }
    }

    /// Same check with the tolerance multiplied by `scale`.
    pub fn rescaled(mut self, scale: f64) -> Self {
        self.tol *= scale;
        self.pass = self.abs_err <= self.tol;
        self
    }
}

/// Where the zero ordinates used by a report came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroSourceInfo {
    Computed { t_max: f64 },
    File { path: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub precision: PrecisionConfig,
    pub sieve_limit: u64,
    pub zeros_available: usize,
    pub zeros_used: usize,
    pub zero_source: ZeroSourceInfo,
    pub tol_scale: f64,
    pub extended: bool,
}

/// A full verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
    pub config: ReportConfig,
    pub overall_pass: bool,
}

impl Report {
    pub fn new(checks: Vec<CheckResult>, config: ReportConfig) -> Self {
        let overall_pass = checks.iter().all(|c| c.pass);
        Report {
            checks,
            config,
            overall_pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["name", "lhs", "rhs", "abs_err", "tol", "pass", "identity"])
            .expect("in-memory write");
        for c in &self.checks {
            w.write_record([
                c.name.clone(),
                fmt_sig(c.lhs),
                fmt_sig(c.rhs),
                format!("{:.3e}", c.abs_err),
                format!("{:.3e}", c.tol),
                c.pass.to_string(),
                c.identity.clone(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }

    pub fn to_table(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(4)
            .max(4);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<width$}  {:>20}  {:>20}  {:>10}  {:>10}  result",
            "check", "lhs", "rhs", "abs_err", "tol"
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<width$}  {:>20}  {:>20}  {:>10.3e}  {:>10.3e}  {}",
                c.name,
                fmt_sig(c.lhs),
                fmt_sig(c.rhs),
                c.abs_err,
                c.tol,
                if c.pass { "PASS" } else { "FAIL" }
            );
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let _ = writeln!(
            out,
            "\n{passed}/{} checks passed (sieve limit {}, {} zeros used) -> {}",
            self.checks.len(),
            self.config.sieve_limit,
            self.config.zeros_used,
            if self.overall_pass { "PASS" } else { "FAIL" }
        );
        out
    }
}

/// Format with 12 significant digits.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if (-5..15).contains(&mag) {
        let decimals = (11 - mag).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.11e}")
    }
}
