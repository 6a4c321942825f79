//! Imaginary quadratic fields `Q(sqrt(-d))`: discriminant, ramification,
//! Kronecker character and the form class group.

mod forms;
mod kronecker;

use alloc::vec::Vec;
use core::fmt;

pub use forms::{ClassGroup, FormClass};
pub use kronecker::{jacobi_symbol, kronecker_symbol};

use crate::error::{Error, Result};

/// Invariants of the imaginary quadratic field `Q(sqrt(-d))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadField {
    d: u64,
    disc_abs: u64,
    ramified_primes: Vec<u64>,
    mu_order: u32,
}

impl QuadField {
    /// The field `Q(sqrt(-d))` for squarefree `d >= 1`.
    pub fn from_squarefree_d(d: i64) -> Result<Self> {
        if d <= 0 {
            return Err(Error::InvalidInput("d must be a positive squarefree integer"));
        }
        let d_abs = d as u64;
        if !is_squarefree(d_abs) {
            return Err(Error::NotSquarefree(d));
        }
        let disc_abs = if d_abs % 4 == 3 { d_abs } else { 4 * d_abs };
        let ramified_primes = prime_divisors(disc_abs);
        let mu_order = match d_abs {
            1 => 4,
            3 => 6,
            _ => 2,
        };
        Ok(Self { d: d_abs, disc_abs, ramified_primes, mu_order })
    }

    /// The field with `|disc| = disc_abs`, if `-disc_abs` is fundamental.
    pub fn from_disc_abs(disc_abs: u64) -> Result<Self> {
        let disc = -(disc_abs as i64);
        if !is_fundamental_discriminant(disc) {
            return Err(Error::NonFundamentalDiscriminant(disc));
        }
        let d = if disc_abs % 4 == 0 { disc_abs / 4 } else { disc_abs };
        Self::from_squarefree_d(d as i64)
    }

    /// `Q(sqrt(-3))`, the field of minimal covolume.
    pub fn eisenstein() -> Self {
        Self::from_squarefree_d(3).expect("3 is squarefree")
    }

    /// `Q(i)`.
    pub fn gaussian() -> Self {
        Self::from_squarefree_d(1).expect("1 is squarefree")
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// `Disc_l`, the absolute value of the field discriminant.
    pub fn disc_abs(&self) -> u64 {
        self.disc_abs
    }

    /// The (negative) fundamental discriminant.
    pub fn disc_signed(&self) -> i64 {
        -(self.disc_abs as i64)
    }

    pub fn ramified_primes(&self) -> &[u64] {
        &self.ramified_primes
    }

    /// Number of rational primes ramified in the field.
    pub fn r(&self) -> usize {
        self.ramified_primes.len()
    }

    /// Order of the group of roots of unity.
    pub fn mu_order(&self) -> u32 {
        self.mu_order
    }

    /// `chi_D(m)` for the field's character.
    pub fn character(&self, m: u64) -> i8 {
        kronecker::kronecker_unchecked(self.disc_signed(), m)
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.d == 1 {
            write!(f, "Q(i)")
        } else {
            write!(f, "Q(sqrt(-{}))", self.d)
        }
    }
}

/// Every imaginary quadratic field with `Disc_l <= max_disc`, in ascending
/// order of discriminant.
pub fn fields_up_to(max_disc: u64) -> Vec<QuadField> {
    (3..=max_disc).filter_map(|disc| QuadField::from_disc_abs(disc).ok()).collect()
}

/// Trial division up to `sqrt(n)`.
pub fn is_squarefree(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

/// Sorted distinct prime divisors.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Whether `disc` is the discriminant of a quadratic field.
pub fn is_fundamental_discriminant(disc: i64) -> bool {
    if disc == 0 || disc == 1 {
        return false;
    }
    let m4 = disc.rem_euclid(4);
    if m4 == 1 {
        return is_squarefree(disc.unsigned_abs());
    }
    if m4 != 0 {
        return false;
    }
    let q = disc / 4;
    matches!(q.rem_euclid(4), 2 | 3) && is_squarefree(q.unsigned_abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eisenstein_field() {
        let f = QuadField::from_squarefree_d(3).unwrap();
        assert_eq!(f.disc_abs(), 3);
        assert_eq!(f.disc_signed(), -3);
        assert_eq!(f.ramified_primes(), &[3]);
        assert_eq!(f.r(), 1);
        assert_eq!(f.mu_order(), 6);
    }

    #[test]
    fn gaussian_field() {
        let f = QuadField::from_squarefree_d(1).unwrap();
        assert_eq!(f.disc_abs(), 4);
        assert_eq!(f.ramified_primes(), &[2]);
        assert_eq!(f.r(), 1);
        assert_eq!(f.mu_order(), 4);
    }

    #[test]
    fn two_ramified_primes() {
        let f = QuadField::from_squarefree_d(5).unwrap();
        assert_eq!(f.disc_abs(), 20);
        assert_eq!(f.ramified_primes(), &[2, 5]);
        assert_eq!(f.r(), 2);
        assert_eq!(f.mu_order(), 2);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(QuadField::from_squarefree_d(0), Err(Error::InvalidInput("d must be a positive squarefree integer")));
        assert!(matches!(QuadField::from_squarefree_d(-3), Err(Error::InvalidInput(_))));
        assert_eq!(QuadField::from_squarefree_d(12), Err(Error::NotSquarefree(12)));
        assert_eq!(QuadField::from_squarefree_d(49), Err(Error::NotSquarefree(49)));
    }

    #[test]
    fn field_list_is_sorted_and_fundamental() {
        let discs: Vec<u64> = fields_up_to(30).iter().map(QuadField::disc_abs).collect();
        assert_eq!(discs, [3, 4, 7, 8, 11, 15, 19, 20, 23, 24]);
        for f in fields_up_to(500) {
            assert!(is_fundamental_discriminant(f.disc_signed()));
            assert!(f.ramified_primes().iter().all(|p| f.disc_abs() % p == 0));
            assert_eq!(QuadField::from_disc_abs(f.disc_abs()).unwrap(), f);
        }
    }

    #[test]
    fn fundamental_discriminants() {
        for d in [-3, -4, -7, -8, -20, -24, -84, 5, 8, 12] {
            assert!(is_fundamental_discriminant(d), "{d}");
        }
        for d in [-1, -2, -12, -16, -27, 0, 1, 4, 9] {
            assert!(!is_fundamental_discriminant(d), "{d}");
        }
    }
}
