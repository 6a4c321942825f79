//! Minimal covolumes of nonuniform arithmetic lattices in `PU(n,1)`
//! associated with an imaginary quadratic field.
//!
//! Two independent routes reach the same number:
//!
//! * the exact route multiplies special values at negative integers,
//!   `nu_l(n) = (n+1) / (2^n h_{l,n+1}) * prod_j zeta(1-2j) L_l(-2j)` for even
//!   `n`, with the extra factor `(-1)^{(n+1)/2} eps zeta(-n)` for odd `n`;
//! * the numeric route evaluates the principal-lattice volume at positive
//!   integers, divides by the index `[Gamma : Lambda]`, and converts to the
//!   Euler–Poincaré measure on `PU(n,1)` with the factor `(n+1)^2`.
//!
//! For odd `n` the factor `eps_l(n)` is known to be 2 only when a single
//! prime ramifies; otherwise it is some divisor of `2^r` that is at least 2,
//! and results become rational intervals with `eps = 2` and `eps = 2^r` at
//! the ends.

use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::lvalues::{l_numeric, zeta_numeric, ExactValues, SpecialValues};
use crate::numeric::{ln_factorial, NumericValue};
use crate::quadfield::{ClassGroup, QuadField};
use crate::rational::ExactRational;

/// A value that is either known exactly or only up to an interval.
#[derive(Debug, Clone, PartialEq)]
pub enum Span<T> {
    Exact(T),
    Interval { lower: T, upper: T },
}

impl<T> Span<T> {
    pub fn is_exact(&self) -> bool {
        matches!(self, Span::Exact(_))
    }

    pub fn lower(&self) -> &T {
        match self {
            Span::Exact(v) => v,
            Span::Interval { lower, .. } => lower,
        }
    }

    pub fn upper(&self) -> &T {
        match self {
            Span::Exact(v) => v,
            Span::Interval { upper, .. } => upper,
        }
    }

    pub fn exact(&self) -> Option<&T> {
        match self {
            Span::Exact(v) => Some(v),
            Span::Interval { .. } => None,
        }
    }

    /// Applies a monotone increasing map to both ends.
    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Span<U> {
        match self {
            Span::Exact(v) => Span::Exact(f(v)),
            Span::Interval { lower, upper } => Span::Interval { lower: f(lower), upper: f(upper) },
        }
    }
}

impl Span<ExactRational> {
    fn negate(&self) -> Self {
        match self {
            Span::Exact(v) => Span::Exact(-v),
            Span::Interval { lower, upper } => Span::Interval { lower: -upper, upper: -lower },
        }
    }
}

/// What is known about `eps_l(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsilonStatus {
    /// Even `n`: the factor does not occur.
    NotApplicable,
    /// Odd `n` with one ramified prime: `eps = 2`.
    Exact(u64),
    /// Odd `n`, `r > 1`: `eps` is a power of two in `[lower, upper]`.
    Bounded { lower: u64, upper: u64 },
}

impl EpsilonStatus {
    pub fn for_field(field: &QuadField, n: u32) -> Self {
        if n % 2 == 0 {
            EpsilonStatus::NotApplicable
        } else if field.r() == 1 {
            EpsilonStatus::Exact(2)
        } else {
            EpsilonStatus::Bounded { lower: 2, upper: 1 << field.r() }
        }
    }
}

/// Everything computed for one `(field, n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CovolumeResult {
    pub field: QuadField,
    pub n: u32,
    /// `nu_l(n) = min |chi(Gamma)|`.
    pub nu: Span<ExactRational>,
    /// `chi = (-1)^n nu`.
    pub chi: Span<ExactRational>,
    /// Complex hyperbolic volume, holomorphic sectional curvature −1.
    pub volume: Span<NumericValue>,
    pub h: u64,
    /// `h_{l,n+1}`.
    pub h_torsion: u64,
    pub epsilon: EpsilonStatus,
    /// `[Gamma_l : Lambda_l]`.
    pub index: Span<ExactRational>,
    /// Bounds on the number of minimal lattices; `None` where undetermined.
    pub multiplicity: Option<(u64, u64)>,
}

impl CovolumeResult {
    pub fn is_exact(&self) -> bool {
        self.nu.is_exact()
    }
}

fn check_dimension(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    Ok(())
}

/// `h_{l,m}`: number of classes whose order divides `m`.
pub fn h_torsion(field: &QuadField, m: u64) -> u64 {
    ClassGroup::reduced_forms(field).torsion_count(m)
}

fn two_pow(n: u32) -> ExactRational {
    ExactRational::from_integer(num_bigint::BigInt::from(1u8) << n)
}

/// `prod_{j=1}^{m} zeta(1-2j) L_l(-2j)`.
fn special_value_product(values: &dyn SpecialValues, field: &QuadField, m: u32) -> Result<ExactRational> {
    let mut acc = ExactRational::one();
    for j in 1..=m {
        acc *= values.zeta_negative(2 * j)?;
        acc *= values.l_negative(field, 2 * j + 1)?;
    }
    Ok(acc)
}

fn nu_even_inner(values: &dyn SpecialValues, field: &QuadField, n: u32, h_t: u64) -> Result<ExactRational> {
    let prefactor = ExactRational::from(n as u64 + 1).checked_div(&(two_pow(n) * ExactRational::from(h_t)))?;
    Ok(prefactor * special_value_product(values, field, n / 2)?)
}

fn nu_odd_inner(values: &dyn SpecialValues, field: &QuadField, n: u32, h_t: u64) -> Result<Span<ExactRational>> {
    let sign = if n.div_ceil(2) % 2 == 0 { 1i64 } else { -1 };
    let base = ExactRational::from(sign * (n as i64 + 1)).checked_div(&(two_pow(n) * ExactRational::from(h_t)))?
        * values.zeta_negative(n + 1)?
        * special_value_product(values, field, (n - 1) / 2)?;
    let at = |eps: u64| &base * &ExactRational::from(eps);
    Ok(match EpsilonStatus::for_field(field, n) {
        EpsilonStatus::Exact(eps) => Span::Exact(at(eps)),
        EpsilonStatus::Bounded { lower, upper } => Span::Interval { lower: at(lower), upper: at(upper) },
        EpsilonStatus::NotApplicable => unreachable!("odd n"),
    })
}

/// `nu_l(n)` for even `n >= 2`.
pub fn nu_even(field: &QuadField, n: u32) -> Result<ExactRational> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidDimension(n));
    }
    nu_even_inner(&ExactValues, field, n, h_torsion(field, n as u64 + 1))
}

/// `nu_l(n)` for odd `n >= 3`; an interval when `eps_l(n)` is only bounded.
pub fn nu_odd(field: &QuadField, n: u32) -> Result<Span<ExactRational>> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidDimension(n));
    }
    nu_odd_inner(&ExactValues, field, n, h_torsion(field, n as u64 + 1))
}

/// `nu_l(n)` for any `n >= 2`.
pub fn nu(field: &QuadField, n: u32) -> Result<Span<ExactRational>> {
    nu_with(&ExactValues, field, n)
}

/// [`nu`] with the special values drawn from `values`.
pub fn nu_with(values: &dyn SpecialValues, field: &QuadField, n: u32) -> Result<Span<ExactRational>> {
    check_dimension(n)?;
    let h_t = h_torsion(field, n as u64 + 1);
    nu_from_parts(values, field, n, h_t)
}

fn nu_from_parts(values: &dyn SpecialValues, field: &QuadField, n: u32, h_t: u64) -> Result<Span<ExactRational>> {
    if n % 2 == 0 {
        Ok(Span::Exact(nu_even_inner(values, field, n, h_t)?))
    } else {
        nu_odd_inner(values, field, n, h_t)
    }
}

/// `chi(Gamma) = (-1)^n nu_l(n)` for the minimal lattices.
pub fn euler_characteristic(field: &QuadField, n: u32) -> Result<Span<ExactRational>> {
    let nu = nu(field, n)?;
    Ok(if n % 2 == 0 { nu } else { nu.negate() })
}

/// `ln((4 pi)^n / (n+1)!)`, the Chern–Gauss–Bonnet factor turning `|chi|`
/// into volume.
pub fn ln_volume_factor(n: u32) -> f64 {
    n as f64 * libm::log(4.0 * PI) - ln_factorial(n as u64 + 1)
}

fn volume_from_nu(nu: &ExactRational, n: u32) -> NumericValue {
    let ln = ln_volume_factor(n) + nu.ln_abs();
    NumericValue::from_ln(ln, 4.0 * f64::EPSILON * (ln.abs() + n as f64 + 4.0))
}

/// `vol = (4 pi)^n / (n+1)! * nu_l(n)`.
pub fn hyperbolic_volume(field: &QuadField, n: u32) -> Result<Span<NumericValue>> {
    Ok(nu(field, n)?.map(|v| volume_from_nu(v, n)))
}

fn index_from_parts(field: &QuadField, n: u32, h_t: u64) -> Span<ExactRational> {
    let full = ExactRational::from((n as u64 + 1) * h_t);
    let div = |eps: u64| full.checked_div(&ExactRational::from(eps)).expect("eps > 0");
    match EpsilonStatus::for_field(field, n) {
        EpsilonStatus::NotApplicable => Span::Exact(full),
        EpsilonStatus::Exact(eps) => Span::Exact(div(eps)),
        EpsilonStatus::Bounded { lower, upper } => Span::Interval { lower: div(upper), upper: div(lower) },
    }
}

/// `[Gamma_l : Lambda_l]`: `(n+1) h_{l,n+1}`, divided by `eps` for odd `n`.
pub fn index_gamma_lambda(field: &QuadField, n: u32) -> Result<Span<ExactRational>> {
    check_dimension(n)?;
    Ok(index_from_parts(field, n, h_torsion(field, n as u64 + 1)))
}

/// The exponent `s` of `Disc_l` in the principal-lattice volume.
pub fn prasad_exponent(n: u32) -> f64 {
    let n = n as f64;
    if n as u32 % 2 == 0 {
        n * (n + 3.0) / 4.0
    } else {
        (n - 1.0) * (n + 2.0) / 4.0
    }
}

/// `ln mu(SU(n,1)/Lambda_l)` and a relative error bound.
fn prasad_ln(field: &QuadField, n: u32) -> Result<(f64, f64)> {
    check_dimension(n)?;
    let ln_2pi = libm::log(2.0 * PI);
    let mut ln = prasad_exponent(n) * libm::log(field.disc_abs() as f64);
    let mut rel = 0.0;
    for j in 1..=n {
        ln += ln_factorial(j as u64) - (j as f64 + 1.0) * ln_2pi;
    }
    for k in 2..=n + 1 {
        let f = if k % 2 == 0 { zeta_numeric(k)? } else { l_numeric(field, k)? };
        ln += libm::log(f.value);
        rel += f.relative_error_bound();
    }
    rel += 8.0 * f64::EPSILON * (ln.abs() + n as f64 * n as f64);
    Ok((ln, rel))
}

/// `mu(SU(n,1)/Lambda_l) = Disc^s prod_j j!/(2 pi)^{j+1} * zeta(2) L(3) zeta(4) ...`,
/// ending in `L(n+1)` for even `n` and `zeta(n+1)` for odd `n`.
pub fn prasad_principal_covolume_numeric(field: &QuadField, n: u32) -> Result<NumericValue> {
    let (ln, rel) = prasad_ln(field, n)?;
    Ok(NumericValue::from_ln(ln, rel))
}

/// `nu` through the numeric route: `(n+1)^2 mu(Lambda) / [Gamma : Lambda]`.
pub fn ep_normalization(field: &QuadField, n: u32) -> Result<Span<NumericValue>> {
    let (ln, rel) = prasad_ln(field, n)?;
    let index = index_gamma_lambda(field, n)?;
    let scaled = |idx: &ExactRational| NumericValue::from_ln(ln + 2.0 * libm::log(n as f64 + 1.0) - idx.ln_abs(), rel + 4.0 * f64::EPSILON);
    Ok(match index {
        Span::Exact(i) => Span::Exact(scaled(&i)),
        // A larger index gives a smaller covolume.
        Span::Interval { lower, upper } => Span::Interval { lower: scaled(&upper), upper: scaled(&lower) },
    })
}

/// Largest relative gap between the numeric route and the exact values
/// supplied by `values`, over both interval ends. Compared in log space so
/// values beyond the double range still compare.
pub fn cross_path_discrepancy_with(values: &dyn SpecialValues, field: &QuadField, n: u32) -> Result<f64> {
    let exact = nu_with(values, field, n)?;
    let (ln, _) = prasad_ln(field, n)?;
    let index = index_gamma_lambda(field, n)?;
    let ln_numeric = |idx: &ExactRational| ln + 2.0 * libm::log(n as f64 + 1.0) - idx.ln_abs();
    let gap = |exact: &ExactRational, idx: &ExactRational| {
        if !exact.is_positive() {
            return f64::INFINITY;
        }
        libm::expm1(ln_numeric(idx) - exact.ln_abs()).abs()
    };
    Ok(match (&exact, &index) {
        (Span::Exact(e), Span::Exact(i)) => gap(e, i),
        (Span::Interval { lower, upper }, Span::Interval { lower: i_lo, upper: i_hi }) => gap(lower, i_hi).max(gap(upper, i_lo)),
        _ => f64::INFINITY,
    })
}

/// [`cross_path_discrepancy_with`] using the exact special values.
pub fn cross_path_discrepancy(field: &QuadField, n: u32) -> Result<f64> {
    cross_path_discrepancy_with(&ExactValues, field, n)
}

fn multiplicity_from_parts(field: &QuadField, n: u32, h_t: u64) -> Result<(u64, u64)> {
    let r = field.r() as u32;
    if n % 2 == 0 {
        let lower = 1u64 << r;
        return Ok((lower, lower * h_t));
    }
    if r != 1 {
        return Err(Error::UnknownMultiplicity { n, ramified: field.r() });
    }
    let upper = if (n + 1) % 8 == 0 { 2 * h_t } else { h_t };
    Ok((1, upper))
}

/// Bounds on the number of isomorphism classes of minimal lattices.
///
/// Even `n`: between `2^r` and `2^r h_{l,n+1}`. Odd `n` with `r = 1`:
/// between 1 and `h_{l,n+1}`, or `2 h_{l,n+1}` when `8 | n+1`. Odd `n` with
/// `r > 1` is undetermined.
pub fn multiplicity_bounds(field: &QuadField, n: u32) -> Result<(u64, u64)> {
    check_dimension(n)?;
    multiplicity_from_parts(field, n, h_torsion(field, n as u64 + 1))
}

/// All quantities for `(field, n)`, sharing one class-group computation.
pub fn covolume(field: &QuadField, n: u32) -> Result<CovolumeResult> {
    check_dimension(n)?;
    let group = ClassGroup::reduced_forms(field);
    let h_t = group.torsion_count(n as u64 + 1);
    let nu = nu_from_parts(&ExactValues, field, n, h_t)?;
    let chi = if n % 2 == 0 { nu.clone() } else { nu.negate() };
    let volume = nu.map(|v| volume_from_nu(v, n));
    let multiplicity = match multiplicity_from_parts(field, n, h_t) {
        Ok(bounds) => Some(bounds),
        Err(Error::UnknownMultiplicity { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(CovolumeResult {
        field: field.clone(),
        n,
        nu,
        chi,
        volume,
        h: group.h(),
        h_torsion: h_t,
        epsilon: EpsilonStatus::for_field(field, n),
        index: index_from_parts(field, n, h_t),
        multiplicity,
    })
}
