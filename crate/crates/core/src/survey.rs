//! Comparisons across fields and dimensions: the field of smallest covolume
//! in each dimension, the dimension of smallest covolume overall, growth of
//! the minimal covolume in `n`, and the cusped-manifold volume bound it is
//! contrasted with.

use alloc::vec::Vec;
use core::f64::consts::PI;

use num_bigint::BigInt;

use crate::bernoulli::binomial_row;
use crate::covolume::{covolume, ln_volume_factor, nu, prasad_exponent, CovolumeResult, Span};
use crate::error::{Error, Result};
use crate::lvalues::{dedekind_zeta_numeric, l_numeric, zeta_numeric};
use crate::numeric::{ln_factorial, NumericValue};
use crate::quadfield::{fields_up_to, ClassGroup, QuadField};
use crate::rational::ExactRational;

/// Discriminant headroom added on top of [`discriminant_bound`].
pub const DEFAULT_SAFETY_MARGIN: u64 = 20;

#[cfg(feature = "parallel")]
fn par_map<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, U>(items: &[T], f: impl Fn(&T) -> U) -> Vec<U> {
    items.iter().map(f).collect()
}

/// `3 (2 pi^5 / 3^{11/2})^{(n-t) / (2(s-1))}` with `t = 1` for even `n`,
/// `t = 0` for odd `n`. A field with larger discriminant (and `Disc > 4`)
/// cannot have smaller covolume than `Q(sqrt(-3))`.
pub fn discriminant_bound(n: u32) -> Result<NumericValue> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    let t = if n % 2 == 0 { 1.0 } else { 0.0 };
    let s = prasad_exponent(n);
    let base = 2.0 * libm::pow(PI, 5.0) / libm::pow(3.0, 5.5);
    let value = 3.0 * libm::pow(base, (n as f64 - t) / (2.0 * (s - 1.0)));
    Ok(NumericValue::new(value, 8.0 * f64::EPSILON * value))
}

/// `h_l <= mu_l m (m-1) (m-1)! (D_l / 4 pi^2)^{m/2} zeta_l(m)` for `m >= 2`.
pub fn brauer_siegel_h_bound(field: &QuadField, m: u32) -> Result<NumericValue> {
    if m < 2 {
        return Err(Error::InvalidInput("Brauer–Siegel bound needs m >= 2"));
    }
    let zeta_l = dedekind_zeta_numeric(field, m)?;
    let mf = m as f64;
    let ln_prefactor = libm::log(field.mu_order() as f64) + libm::log(mf) + libm::log(mf - 1.0) + ln_factorial(m as u64 - 1)
        + 0.5 * mf * libm::log(field.disc_abs() as f64 / (4.0 * PI * PI));
    let prefactor = libm::exp(ln_prefactor);
    let value = prefactor * zeta_l.value;
    Ok(NumericValue::new(value, prefactor * zeta_l.abs_error_bound + 16.0 * f64::EPSILON * value))
}

/// One entry of a minimal-field search.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub field: QuadField,
    pub nu: Span<ExactRational>,
}

/// Every field examined by [`minimal_field`], in ascending discriminant order.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub n: u32,
    pub discriminant_bound: NumericValue,
    /// All fields with `Disc <= search_limit` were examined.
    pub search_limit: u64,
    pub candidates: Vec<Candidate>,
}

impl Certificate {
    /// Whether `winner` is at most every candidate's lower endpoint.
    pub fn is_sound_for(&self, winner: &ExactRational) -> bool {
        self.candidates.iter().all(|c| winner <= c.nu.lower())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinimalField {
    pub field: QuadField,
    pub result: CovolumeResult,
    pub certificate: Certificate,
}

/// The field with the smallest `nu_l(n)` among all fields with
/// `Disc <= max(bound, 4) + safety_margin`. Intervals rank by their lower end.
pub fn minimal_field(n: u32, safety_margin: u64) -> Result<MinimalField> {
    let bound = discriminant_bound(n)?;
    let search_limit = libm::ceil(bound.value.max(4.0)) as u64 + safety_margin;
    let fields = fields_up_to(search_limit);
    let values = par_map(&fields, |f| nu(f, n));
    let mut candidates = Vec::with_capacity(fields.len());
    for (field, value) in fields.into_iter().zip(values) {
        candidates.push(Candidate { field, nu: value? });
    }
    let mut best = 0;
    for (i, c) in candidates.iter().enumerate().skip(1) {
        if c.nu.lower() < candidates[best].nu.lower() {
            best = i;
        }
    }
    if let Some(other) = candidates.iter().enumerate().find(|(i, c)| *i != best && c.nu.lower() == candidates[best].nu.lower()) {
        return Err(Error::TieDetected { first: candidates[best].field.disc_abs(), second: other.1.field.disc_abs() });
    }
    let field = candidates[best].field.clone();
    let result = covolume(&field, n)?;
    Ok(MinimalField { field, result, certificate: Certificate { n, discriminant_bound: bound, search_limit, candidates } })
}

/// `nu_l(n+1) / nu_l(n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub n: u32,
    pub q: Span<ExactRational>,
    /// `ln(q) / n`, from the lower end of `q`.
    pub log_q_over_n: f64,
    /// The ratio re-derived from values at positive integers; present when
    /// both covolumes are exact.
    pub closed_form: Option<NumericValue>,
}

impl GrowthReport {
    /// `|closed_form - q| / q`.
    pub fn closed_form_discrepancy(&self) -> Option<f64> {
        let closed = self.closed_form?;
        let q = self.q.exact()?;
        Some(libm::expm1(libm::log(closed.value) - q.ln_abs()).abs())
    }
}

fn ratio_span(num: &Span<ExactRational>, den: &Span<ExactRational>) -> Result<Span<ExactRational>> {
    Ok(match (num, den) {
        (Span::Exact(a), Span::Exact(b)) => Span::Exact(a.checked_div(b)?),
        _ => Span::Interval { lower: num.lower().checked_div(den.upper())?, upper: num.upper().checked_div(den.lower())? },
    })
}

/// The growth ratio from the quotient of the two volume formulas:
/// `Disc^{s(n+1)-s(n)} eps^{±1} (h_{n+1}/h_{n+2}) (n+2)/(n+1) (n+1)!/(2 pi)^{n+2} F(n+2)`,
/// `F = zeta` for even `n` and `L_l` for odd `n`. The `Disc` exponent is 0
/// for even `n` and `n + 3/2` for odd `n`; `eps = 2` multiplies for even `n`
/// (it belongs to `nu(n+1)`) and divides for odd `n`.
pub fn growth_closed_form(field: &QuadField, n: u32) -> Result<NumericValue> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    if field.r() != 1 {
        return Err(Error::InvalidInput("closed-form growth ratio needs a single ramified prime"));
    }
    let group = ClassGroup::reduced_forms(field);
    let h_ratio = group.torsion_count(n as u64 + 1) as f64 / group.torsion_count(n as u64 + 2) as f64;
    let nf = n as f64;
    let (disc_exp, eps_ln, f) = if n % 2 == 0 {
        (0.0, libm::log(2.0), zeta_numeric(n + 2)?)
    } else {
        (nf + 1.5, -libm::log(2.0), l_numeric(field, n + 2)?)
    };
    let ln = disc_exp * libm::log(field.disc_abs() as f64) + eps_ln + libm::log(h_ratio) + libm::log((nf + 2.0) / (nf + 1.0))
        + ln_factorial(n as u64 + 1)
        - (nf + 2.0) * libm::log(2.0 * PI)
        + libm::log(f.value);
    Ok(NumericValue::from_ln(ln, f.relative_error_bound() + 8.0 * f64::EPSILON * (ln.abs() + nf)))
}

/// `q_l(n) = nu_l(n+1) / nu_l(n)`, exact, with the closed form alongside.
pub fn growth_ratio(field: &QuadField, n: u32) -> Result<GrowthReport> {
    let lower = nu(field, n)?;
    let upper = nu(field, n + 1)?;
    growth_from_values(field, n, &lower, &upper)
}

fn growth_from_values(field: &QuadField, n: u32, at_n: &Span<ExactRational>, at_next: &Span<ExactRational>) -> Result<GrowthReport> {
    let q = ratio_span(at_next, at_n)?;
    let log_q_over_n = q.lower().ln_abs() / n as f64;
    let closed_form = if q.is_exact() && field.r() == 1 { Some(growth_closed_form(field, n)?) } else { None };
    Ok(GrowthReport { n, q, log_q_over_n, closed_form })
}

/// Result of scanning dimensions `2..=n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct OverallMinimum {
    /// Dimension of smallest `|chi|`.
    pub n_star: u32,
    pub result: CovolumeResult,
    /// Dimension of smallest complex hyperbolic volume.
    pub n_star_volume: u32,
    /// Minimal field per dimension, `n = 2, 3, ..., n_max`.
    pub per_dimension: Vec<MinimalField>,
    /// Growth ratios of the winning field for `n = 2 ..= n_max - 1`.
    pub growth: Vec<GrowthReport>,
    /// Smallest `n_1` with `q(m) > 1` for every scanned `m >= n_1`.
    pub growth_threshold: Option<u32>,
}

/// Scans `n = 2 ..= n_max` with [`minimal_field`] and returns the dimension of
/// smallest covolume, under both the Euler–Poincaré and the volume metric.
pub fn overall_minimum(n_max: u32) -> Result<OverallMinimum> {
    if n_max < 10 {
        return Err(Error::InvalidDimension(n_max));
    }
    let dims: Vec<u32> = (2..=n_max).collect();
    let per_dimension = par_map(&dims, |&n| minimal_field(n, DEFAULT_SAFETY_MARGIN)).into_iter().collect::<Result<Vec<_>>>()?;

    let mut best = 0;
    let mut best_volume = 0;
    let ln_volume = |m: &MinimalField| ln_volume_factor(m.result.n) + m.result.nu.lower().ln_abs();
    for (i, m) in per_dimension.iter().enumerate() {
        if m.result.nu.lower() < per_dimension[best].result.nu.lower() {
            best = i;
        }
        if ln_volume(m) < ln_volume(&per_dimension[best_volume]) {
            best_volume = i;
        }
    }
    let winner = per_dimension[best].field.clone();

    let mut growth = Vec::with_capacity(dims.len());
    for pair in per_dimension.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let (at_n, at_next) = if a.field == winner && b.field == winner {
            (a.result.nu.clone(), b.result.nu.clone())
        } else {
            (nu(&winner, a.result.n)?, nu(&winner, b.result.n)?)
        };
        growth.push(growth_from_values(&winner, a.result.n, &at_n, &at_next)?);
    }
    let one = ExactRational::one();
    let growth_threshold = growth.iter().rev().take_while(|g| g.q.lower() > &one).last().map(|g| g.n);

    Ok(OverallMinimum {
        n_star: per_dimension[best].result.n,
        result: per_dimension[best].result.clone(),
        n_star_volume: per_dimension[best_volume].result.n,
        per_dimension,
        growth,
        growth_threshold,
    })
}

/// `P(l) = (n l + n + l)! / (n! (n l + l)!)`, i.e. `C(n l + n + l, n)`.
pub fn hwang_p(n: u32, l: u32) -> BigInt {
    let top = (n * l + n + l) as usize;
    binomial_row(top).swap_remove(n as usize)
}

/// Volume lower bound for a smooth complex hyperbolic `n`-manifold with `k`
/// cusps: `k (4 pi)^n / (n! (P(4) - P(2))) * (1 - (n+1) / (P(4) - P(2)))`.
pub fn hwang_bound(n: u32, k: u64) -> Result<NumericValue> {
    if n < 2 {
        return Err(Error::InvalidInput("Hwang bound needs n >= 2"));
    }
    if k == 0 {
        return Err(Error::InvalidInput("Hwang bound needs k >= 1"));
    }
    let gap = ExactRational::from_integer(hwang_p(n, 4) - hwang_p(n, 2));
    let n_fact: BigInt = (1..=n as u64).map(BigInt::from).product();
    let correction = ExactRational::one() - ExactRational::from(n as u64 + 1).checked_div(&gap)?;
    let coefficient = correction.checked_div(&(ExactRational::from_integer(n_fact) * gap))?;
    let unit = coefficient.to_f64() * libm::pow(4.0 * PI, n as f64);
    let value = unit * k as f64;
    Ok(NumericValue::new(value, 4.0 * (n as f64 + 2.0) * f64::EPSILON * value))
}
