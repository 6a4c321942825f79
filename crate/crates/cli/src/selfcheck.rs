//! Consistency of the exact covolume values against the numeric
//! principal-lattice volume formula.

use covolume_core::covolume::cross_path_discrepancy_with;
use covolume_core::quadfield::fields_up_to;
use covolume_core::{QuadField, SpecialValues};
use serde::Serialize;

/// Relative tolerance of the cross-path comparison.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Environment variable that can tighten [`DEFAULT_TOLERANCE`].
pub const PRECISION_VAR: &str = "COVOLUME_PRECISION";

/// Reads [`PRECISION_VAR`]. Values above the default are ignored, since the
/// variable may only tighten the check.
pub fn tolerance_from_env() -> Result<f64, String> {
    match std::env::var(PRECISION_VAR) {
        Err(_) => Ok(DEFAULT_TOLERANCE),
        Ok(text) => {
            let value: f64 = text.trim().parse().map_err(|_| format!("{PRECISION_VAR}={text:?} is not a number"))?;
            if value.is_nan() || value <= 0.0 {
                return Err(format!("{PRECISION_VAR} must be positive"));
            }
            Ok(value.min(DEFAULT_TOLERANCE))
        }
    }
}

/// `(field, n)` pairs of the full run: `Disc <= 100`, one ramified prime,
/// `2 <= n <= 20`.
pub fn full_cases() -> Vec<(QuadField, u32)> {
    fields_up_to(100).into_iter().filter(|f| f.r() == 1).flat_map(|f| (2..=20).map(move |n| (f.clone(), n))).collect()
}

/// `Q(sqrt(-3))` at `n = 2, 3, 9`.
pub fn quick_cases() -> Vec<(QuadField, u32)> {
    [2, 3, 9].into_iter().map(|n| (QuadField::eisenstein(), n)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub d: u64,
    pub disc: u64,
    pub n: u32,
    /// Relative gap; `None` when a value could not be computed.
    pub discrepancy: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelfcheckReport {
    pub tolerance: f64,
    pub lines: Vec<CheckLine>,
}

impl SelfcheckReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckLine> {
        self.lines.iter().filter(|l| !l.pass)
    }
}

pub fn run(values: &dyn SpecialValues, cases: &[(QuadField, u32)], tolerance: f64) -> SelfcheckReport {
    let lines = cases
        .iter()
        .map(|(field, n)| {
            let (discrepancy, error) = match cross_path_discrepancy_with(values, field, *n) {
                Ok(gap) => (Some(gap), None),
                Err(e) => (None, Some(e.to_string())),
            };
            CheckLine {
                d: field.d(),
                disc: field.disc_abs(),
                n: *n,
                discrepancy,
                tolerance,
                pass: discrepancy.is_some_and(|g| g <= tolerance),
                error,
            }
        })
        .collect();
    SelfcheckReport { tolerance, lines }
}

#[cfg(test)]
mod tests {
    use super::*;
    use covolume_core::ExactValues;

    #[test]
    fn quick_run_passes() {
        let report = run(&ExactValues, &quick_cases(), DEFAULT_TOLERANCE);
        assert_eq!(report.lines.len(), 3);
        assert!(report.passed());
    }

    #[test]
    fn full_case_list() {
        let cases = full_cases();
        assert!(cases.iter().all(|(f, n)| f.disc_abs() <= 100 && f.r() == 1 && (2..=20).contains(n)));
        assert_eq!(cases.len() % 19, 0);
    }
}
