use covolume::commands;
use covolume::selfcheck::{self, DEFAULT_TOLERANCE};
use covolume_core::lvalues::{l_negative, zeta_negative};
use covolume_core::{ExactRational, ExactValues, QuadField, Result, SpecialValues};

/// Exact values with one of them scaled by `1 + 1/10^6`.
struct Perturbed {
    zeta_index: Option<u32>,
    l_index: Option<u32>,
}

fn nudge(v: ExactRational) -> ExactRational {
    v * ExactRational::new(1_000_001, 1_000_000).unwrap()
}

impl SpecialValues for Perturbed {
    fn zeta_negative(&self, k: u32) -> Result<ExactRational> {
        let v = zeta_negative(k)?;
        Ok(if self.zeta_index == Some(k) { nudge(v) } else { v })
    }

    fn l_negative(&self, field: &QuadField, k: u32) -> Result<ExactRational> {
        let v = l_negative(field, k)?;
        Ok(if self.l_index == Some(k) { nudge(v) } else { v })
    }
}

#[test]
fn unperturbed_values_pass() {
    assert!(selfcheck::run(&ExactValues, &selfcheck::quick_cases(), DEFAULT_TOLERANCE).passed());
}

#[test]
fn perturbed_bernoulli_values_fail() {
    for k in [2, 4, 6, 8] {
        let values = Perturbed { zeta_index: Some(k), l_index: None };
        let report = selfcheck::run(&values, &selfcheck::quick_cases(), DEFAULT_TOLERANCE);
        assert!(!report.passed(), "zeta index {k}");
    }
    for k in [3, 5, 7, 9] {
        let values = Perturbed { zeta_index: None, l_index: Some(k) };
        let (report, out) = commands::selfcheck(&values, true, DEFAULT_TOLERANCE);
        assert!(!report.passed(), "L index {k}");
        let failed = report.failures().next().unwrap();
        assert_eq!(failed.d, 3);
        assert!(failed.discrepancy.unwrap() > DEFAULT_TOLERANCE);
        assert!(out.render(covolume::Format::Table).contains("FAIL"));
    }
}

#[test]
fn perturbation_at_unused_index_is_invisible() {
    let values = Perturbed { zeta_index: Some(40), l_index: None };
    assert!(selfcheck::run(&values, &selfcheck::quick_cases(), DEFAULT_TOLERANCE).passed());
}
