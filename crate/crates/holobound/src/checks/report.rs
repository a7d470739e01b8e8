//! Per-check records with stable case identifiers.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::integrate::IntegrationResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// One check outcome.
///
/// Convention: `lhs ≤ rhs·(1 + tolerance)` is the pass condition. Equality
/// checks report the measured deviation as `lhs` and the allowance as `rhs`
/// with tolerance 0, so the same condition applies.
#[derive(Debug, Clone, Serialize)]
pub struct EstimateReport {
    pub case_id: String,
    pub check: String,
    pub geometry: String,
    pub n: usize,
    pub p: f64,
    pub alpha: String,
    pub point: String,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub tolerance: f64,
    pub err_est: f64,
    pub method: String,
    pub budget: u64,
    pub converged: bool,
    pub verdict: Verdict,
}

/// Context shared by every report a check emits.
#[derive(Debug, Clone)]
pub struct CaseContext {
    pub check: &'static str,
    pub geometry: String,
    pub n: usize,
    pub p: f64,
    pub alpha: String,
    pub point: String,
    pub descriptor: String,
}

impl CaseContext {
    pub fn case_id(&self) -> String {
        let mut hasher = Sha256::new();
        hasher.update(self.check.as_bytes());
        hasher.update(self.geometry.as_bytes());
        hasher.update(self.n.to_le_bytes());
        hasher.update(self.p.to_le_bytes());
        hasher.update(self.alpha.as_bytes());
        hasher.update(self.point.as_bytes());
        hasher.update(self.descriptor.as_bytes());
        let digest = hasher.finalize();
        let hex: String = digest[..4].iter().map(|b| format!("{b:02x}")).collect();
        format!("{}/{}/n{}/{}", self.check, self.geometry, self.n, hex)
    }

    /// Inequality-style report: pass iff lhs ≤ rhs·(1+tolerance).
    pub fn bound_report(
        &self,
        lhs: f64,
        rhs: f64,
        tolerance: f64,
        integration: &IntegrationResult,
    ) -> EstimateReport {
        let ratio = if rhs == 0.0 { f64::INFINITY } else { lhs / rhs };
        let verdict = if !integration.converged {
            Verdict::Inconclusive
        } else if lhs <= rhs * (1.0 + tolerance) {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        EstimateReport {
            case_id: self.case_id(),
            check: self.check.to_string(),
            geometry: self.geometry.clone(),
            n: self.n,
            p: self.p,
            alpha: self.alpha.clone(),
            point: self.point.clone(),
            lhs,
            rhs,
            ratio,
            tolerance,
            err_est: integration.error,
            method: integration.method.to_string(),
            budget: integration.nodes,
            converged: integration.converged,
            verdict,
        }
    }

    /// Equality-style report: lhs = |deviation|, rhs = allowance.
    pub fn deviation_report(
        &self,
        deviation: f64,
        allowance: f64,
        integration: &IntegrationResult,
    ) -> EstimateReport {
        self.bound_report(deviation, allowance, 0.0, integration)
    }

    /// Two-sided report: pass iff lower ≤ value ≤ upper.
    pub fn band_report(
        &self,
        value: f64,
        lower: f64,
        upper: f64,
        integration: &IntegrationResult,
    ) -> EstimateReport {
        let verdict = if !integration.converged {
            Verdict::Inconclusive
        } else if value >= lower && value <= upper {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        EstimateReport {
            case_id: self.case_id(),
            check: self.check.to_string(),
            geometry: self.geometry.clone(),
            n: self.n,
            p: self.p,
            alpha: self.alpha.clone(),
            point: self.point.clone(),
            lhs: value,
            rhs: upper,
            ratio: if upper == 0.0 { f64::INFINITY } else { value / upper },
            tolerance: 0.0,
            err_est: integration.error,
            method: integration.method.to_string(),
            budget: integration.nodes,
            converged: integration.converged,
            verdict,
        }
    }
}

/// A zero-cost integration stub for checks that are purely algebraic.
pub fn exact_integration() -> IntegrationResult {
    IntegrationResult {
        value: 0.0,
        error: 0.0,
        method: crate::integrate::Method::RadialGauss,
        nodes: 0,
        converged: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> CaseContext {
        CaseContext {
            check: "bound",
            geometry: "fock".into(),
            n: 1,
            p: 2.0,
            alpha: "1".into(),
            point: "(0,0)".into(),
            descriptor: "f".into(),
        }
    }

    #[test]
    fn case_ids_are_stable_and_distinct() {
        let a = ctx().case_id();
        let b = ctx().case_id();
        assert_eq!(a, b);
        let mut other = ctx();
        other.p = 4.0;
        assert_ne!(a, other.case_id());
    }

    #[test]
    fn verdict_logic() {
        let ok = exact_integration();
        let r = ctx().bound_report(1.0, 1.0, 1e-6, &ok);
        assert_eq!(r.verdict, Verdict::Pass);
        let r = ctx().bound_report(1.1, 1.0, 1e-6, &ok);
        assert_eq!(r.verdict, Verdict::Fail);
        let not_conv = IntegrationResult {
            converged: false,
            ..ok
        };
        let r = ctx().bound_report(0.5, 1.0, 0.0, &not_conv);
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }
}
