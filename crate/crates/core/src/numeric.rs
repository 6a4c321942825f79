//! Floating-point values with an attached absolute error bound, plus the
//! Euler–Maclaurin evaluation of Hurwitz zeta used for `zeta(s)` and `L(s)`
//! at integers `s >= 2`.

use core::f64::consts::PI;

use crate::bernoulli::bernoulli_number;

/// A double together with a bound on its absolute error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericValue {
    pub value: f64,
    pub abs_error_bound: f64,
}

impl NumericValue {
    pub fn new(value: f64, abs_error_bound: f64) -> Self {
        Self { value, abs_error_bound }
    }

    pub fn exact(value: f64) -> Self {
        Self { value, abs_error_bound: 0.0 }
    }

    /// Builds a value from its natural logarithm and a relative error bound.
    pub fn from_ln(ln_value: f64, rel_error: f64) -> Self {
        let value = libm::exp(ln_value);
        Self { value, abs_error_bound: value * rel_error }
    }

    pub fn relative_error_bound(&self) -> f64 {
        if self.value == 0.0 {
            f64::INFINITY
        } else {
            self.abs_error_bound / self.value.abs()
        }
    }

    /// `|self - other| / |other|`.
    pub fn relative_difference(&self, other: f64) -> f64 {
        (self.value - other).abs() / other.abs()
    }
}

const EULER_MACLAURIN_SHIFT: u64 = 16;
const EULER_MACLAURIN_TERMS: usize = 12;

/// Hurwitz zeta `sum_{k>=0} (q + k)^{-s}` for integer `s >= 2` and `q > 0`.
///
/// Sums the first `M` terms directly and the tail by Euler–Maclaurin. For real
/// `s > 1` the remainder is bounded by the first omitted correction term,
/// which is returned as part of the error bound together with a rounding
/// allowance.
pub fn hurwitz_zeta(s: u32, q: f64) -> NumericValue {
    assert!(s >= 2 && q > 0.0);
    let sf = s as f64;
    let mut head = 0.0;
    let mut k = 0;
    while k < EULER_MACLAURIN_SHIFT {
        head += libm::pow(q + k as f64, -sf);
        k += 1;
    }
    let x = q + EULER_MACLAURIN_SHIFT as f64;
    let mut tail = libm::pow(x, 1.0 - sf) / (sf - 1.0) + 0.5 * libm::pow(x, -sf);
    // Correction j: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}.
    let mut rising = sf; // s (s+1) ... (s + 2j - 2)
    let mut fact = 2.0; // (2j)!
    let mut x_pow = libm::pow(x, -sf - 1.0);
    let mut omitted = 0.0;
    for j in 1..=EULER_MACLAURIN_TERMS + 1 {
        let term = bernoulli_number(2 * j).to_f64() / fact * rising * x_pow;
        if j > EULER_MACLAURIN_TERMS {
            omitted = term.abs();
            break;
        }
        tail += term;
        let a = (2 * j) as f64;
        rising *= (sf + a - 1.0) * (sf + a);
        fact *= (a + 1.0) * (a + 2.0);
        x_pow /= x * x;
    }
    let value = head + tail;
    let rounding = 4.0 * f64::EPSILON * (EULER_MACLAURIN_SHIFT as f64 + 4.0) * value.abs();
    NumericValue::new(value, omitted + rounding)
}

/// `pi^2 / 6`.
pub const ZETA_2: f64 = PI * PI / 6.0;

/// `ln n!`, exact summation of logs.
pub fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|k| libm::log(k as f64)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn riemann_zeta_closed_forms() {
        let z2 = hurwitz_zeta(2, 1.0);
        assert!((z2.value - ZETA_2).abs() < 1e-14);
        assert!(z2.abs_error_bound < 1e-13);
        let z4 = hurwitz_zeta(4, 1.0);
        assert!((z4.value - PI.powi(4) / 90.0).abs() < 1e-14);
    }

    #[test]
    fn quarter_shifts_give_catalan_style_values() {
        // zeta(2, 1/4) - zeta(2, 3/4) = 16 G (Catalan's constant).
        let g = 0.915_965_594_177_219;
        let diff = hurwitz_zeta(2, 0.25).value - hurwitz_zeta(2, 0.75).value;
        assert!((diff - 16.0 * g).abs() < 1e-12);
    }

    #[test]
    fn tail_bound_is_tiny() {
        for s in 2..40 {
            for q in [0.001, 0.1, 0.5, 1.0] {
                let v = hurwitz_zeta(s, q);
                assert!(v.relative_error_bound() < 1e-13, "s={s} q={q}");
            }
        }
    }
}
