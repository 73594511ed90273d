//! Executable statements of the identities and structure results, each
//! measured on concrete inputs and reported as a [`CheckReport`].
//!
//! Checks verify conclusions on sampled data; hypotheses such as holomorphic
//! extension are only ever exercised through closed forms.

mod classify;
mod falsify;
mod identities;
mod scenarios;
mod theorems;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub use classify::{classify_theorem4prime, Classification, CHANNEL_VANISH, CROSS_VANISH};
pub use falsify::{check_strip_form, falsification_demo, phi_deviation};
pub use identities::identity_suite;
pub use scenarios::{catalog_pairs, full_catalog, run_demo, shipped_witnesses, Witness};
pub use theorems::{
    check_curve_against, check_m0f_identity, check_obstruction, check_radial_symmetry,
    check_theorem1, check_theorem2, check_theorem4,
};

/// Identities exact at the level of the discretization.
pub const TOL_SYMMETRY: f64 = 1e-8;
/// Comparisons against closed forms.
pub const TOL_CLOSED_FORM: f64 = 1e-6;
/// Constructed families, where two transforms compound.
pub const TOL_ROUND_TRIP: f64 = 1e-4;

/// Outcome of one check. `pass` is always `residual <= tolerance`; a NaN
/// residual fails.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub details: Map<String, Value>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            check: check.into(),
            residual,
            tolerance,
            pass: residual <= tolerance,
            details: Map::new(),
        }
    }

    /// Adds a detail entry. Non-finite numbers are stored as strings so the
    /// report stays valid JSON.
    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        let v = value.into();
        self.details.insert(key.to_owned(), v);
        self
    }

    pub fn with_num(self, key: &str, x: f64) -> Self {
        if x.is_finite() {
            self.with(key, x)
        } else {
            self.with(key, x.to_string())
        }
    }

    /// Same measurement judged against another tolerance.
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self.pass = self.residual <= tolerance;
        self
    }

    pub fn detail(&self, key: &str) -> Option<f64> {
        self.details.get(key).and_then(Value::as_f64)
    }

    pub fn detail_str(&self, key: &str) -> Option<&str> {
        self.details.get(key).and_then(Value::as_str)
    }

    /// One line: `PASS name residual=… tol=…`.
    pub fn summary(&self) -> String {
        format!(
            "{} {:<28} residual={:.3e} tol={:.1e}",
            if self.pass { "PASS" } else { "FAIL" },
            self.check,
            self.residual,
            self.tolerance
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_follows_residual() {
        assert!(CheckReport::new("a", 1e-9, 1e-8).pass);
        assert!(!CheckReport::new("a", 1e-7, 1e-8).pass);
        assert!(!CheckReport::new("a", f64::NAN, 1.0).pass);
        let r = CheckReport::new("a", 1e-7, 1e-8).with_tolerance(1e-6);
        assert!(r.pass);
    }

    #[test]
    fn json_shape() {
        let r = CheckReport::new("x", 0.5, 1.0)
            .with_num("c0", 2.0)
            .with_num("bad", f64::INFINITY)
            .with("verdict", "ok");
        let v: Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["check"], "x");
        assert_eq!(v["pass"], true);
        assert_eq!(v["details"]["c0"], 2.0);
        assert_eq!(v["details"]["bad"], "inf");
        assert_eq!(r.detail_str("verdict"), Some("ok"));
    }
}
