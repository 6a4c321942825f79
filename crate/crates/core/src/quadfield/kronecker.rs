use crate::error::{Error, Result};
use crate::quadfield::is_fundamental_discriminant;

/// Jacobi symbol `(a / n)` for odd positive `n`, by quadratic reciprocity.
pub fn jacobi_symbol(a: i64, n: u64) -> i8 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd modulus");
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut sign = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        core::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Kronecker symbol `(disc / m)` for a fundamental discriminant `disc`.
pub fn kronecker_symbol(disc: i64, m: u64) -> Result<i8> {
    if !is_fundamental_discriminant(disc) {
        return Err(Error::NonFundamentalDiscriminant(disc));
    }
    Ok(kronecker_unchecked(disc, m))
}

pub(crate) fn kronecker_unchecked(disc: i64, m: u64) -> i8 {
    if m == 0 {
        return if disc.unsigned_abs() == 1 { 1 } else { 0 };
    }
    let twos = m.trailing_zeros();
    let odd = m >> twos;
    let mut sign = 1i8;
    if twos > 0 {
        // (D/2): 0 for even D, else +1 for D = ±1 mod 8 and -1 for D = ±3 mod 8.
        let two = match disc.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        };
        if two == 0 {
            return 0;
        }
        if twos % 2 == 1 {
            sign = two;
        }
    }
    sign * jacobi_symbol(disc, odd)
}
