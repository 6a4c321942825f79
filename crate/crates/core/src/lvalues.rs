//! Special values of the Riemann zeta function and of the quadratic Dirichlet
//! L-function `L_l = zeta_l / zeta`.
//!
//! Values at non-positive integers are exact rationals:
//! `zeta(1-k) = -B_k / k` and `L_l(1-k) = -B_{k,chi} / k`. Values at integers
//! `s >= 2` are doubles with a truncation bound and exist for the numeric
//! volume formula and cross-checks.

use crate::bernoulli::{bernoulli_number, generalized_bernoulli};
use crate::error::{Error, Result};
use crate::numeric::{hurwitz_zeta, NumericValue};
use crate::quadfield::QuadField;
use crate::rational::ExactRational;

/// Source of the exact special values that feed the covolume formulas.
///
/// [`ExactValues`] is the production implementation; other implementations
/// exist to perturb individual values when testing sensitivity of the
/// consistency checks.
pub trait SpecialValues: Sync {
    /// `zeta(1 - k)` for even `k >= 2`.
    fn zeta_negative(&self, k: u32) -> Result<ExactRational>;
    /// `L_l(1 - k)` for odd `k >= 1`.
    fn l_negative(&self, field: &QuadField, k: u32) -> Result<ExactRational>;
}

/// Bernoulli-number backed special values.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExactValues;

impl SpecialValues for ExactValues {
    fn zeta_negative(&self, k: u32) -> Result<ExactRational> {
        zeta_negative(k)
    }

    fn l_negative(&self, field: &QuadField, k: u32) -> Result<ExactRational> {
        l_negative(field, k)
    }
}

/// `zeta(1 - k) = -B_k / k` for even `k >= 2`.
pub fn zeta_negative(k: u32) -> Result<ExactRational> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::InvalidInput("zeta_negative needs an even k >= 2"));
    }
    Ok(-bernoulli_number(k as usize) * ExactRational::new(1, k as i64)?)
}

/// `L_l(1 - k) = -B_{k,chi} / k` for odd `k >= 1`.
pub fn l_negative(field: &QuadField, k: u32) -> Result<ExactRational> {
    if k % 2 == 0 {
        return Err(Error::InvalidInput("l_negative needs an odd k >= 1"));
    }
    let b = generalized_bernoulli(k as usize, field.disc_signed())?;
    Ok(-b * ExactRational::new(1, k as i64)?)
}

/// `zeta(s)` for integer `s >= 2`.
pub fn zeta_numeric(s: u32) -> Result<NumericValue> {
    if s < 2 {
        return Err(Error::InvalidInput("zeta_numeric needs s >= 2"));
    }
    Ok(hurwitz_zeta(s, 1.0))
}

/// `L_l(s) = sum_m chi(m) m^{-s}` for integer `s >= 2`, evaluated as
/// `N^{-s} sum_{a=1}^{N} chi(a) zeta(s, a/N)`.
pub fn l_numeric(field: &QuadField, s: u32) -> Result<NumericValue> {
    if s < 2 {
        return Err(Error::InvalidInput("l_numeric needs s >= 2"));
    }
    let n = field.disc_abs();
    let nf = n as f64;
    let scale = libm::pow(nf, -(s as f64));
    let mut value = 0.0;
    let mut err = 0.0;
    for a in 1..n {
        let chi = field.character(a);
        if chi == 0 {
            continue;
        }
        let h = hurwitz_zeta(s, a as f64 / nf);
        value += chi as f64 * h.value * scale;
        err += h.abs_error_bound * scale;
    }
    err += 2.0 * f64::EPSILON * n as f64 * value.abs().max(1.0);
    Ok(NumericValue::new(value, err))
}

/// `zeta_l(s) = zeta(s) L_l(s)`, the Dedekind zeta function of the field.
pub fn dedekind_zeta_numeric(field: &QuadField, s: u32) -> Result<NumericValue> {
    let z = zeta_numeric(s)?;
    let l = l_numeric(field, s)?;
    let value = z.value * l.value;
    let err = z.abs_error_bound * l.value.abs() + l.abs_error_bound * z.value.abs() + f64::EPSILON * value.abs();
    Ok(NumericValue::new(value, err))
}
