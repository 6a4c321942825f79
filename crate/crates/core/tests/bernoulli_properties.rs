use covolume_core::bernoulli::{
    bernoulli_number, bernoulli_numbers, bernoulli_polynomial_value, generalized_bernoulli, BernoulliCache,
};
use covolume_core::quadfield::fields_up_to;
use covolume_core::ExactRational;
use num_bigint::BigInt;
use proptest::prelude::*;

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|q| q * q <= p).all(|q| p % q != 0)
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

#[test]
fn von_staudt_clausen_denominators() {
    for k in (2..=80u64).step_by(2) {
        let expected: BigInt = (2..=k + 1).filter(|&p| is_prime(p) && k % (p - 1) == 0).map(BigInt::from).product();
        assert_eq!(bernoulli_number(k as usize).denom(), &expected, "k={k}");
    }
}

#[test]
fn defining_recurrence() {
    let b = bernoulli_numbers(81);
    for m in 1..=80u64 {
        let sum: ExactRational =
            (0..=m).map(|i| ExactRational::from_integer(binomial(m + 1, i)) * b[i as usize].clone()).sum();
        assert!(sum.is_zero(), "m={m}");
    }
}

#[test]
fn odd_indices_vanish() {
    assert_eq!(bernoulli_number(1), ExactRational::new(-1, 2).unwrap());
    for k in (3..=81).step_by(2) {
        assert!(bernoulli_number(k).is_zero(), "k={k}");
    }
}

#[test]
fn cache_is_pure() {
    let first: Vec<_> = (0..=120).map(bernoulli_number).collect();
    let second: Vec<_> = (0..=120).rev().map(bernoulli_number).collect::<Vec<_>>().into_iter().rev().collect();
    assert_eq!(first, second);
    assert_eq!(BernoulliCache::up_to(120).as_slice(), &first[..]);
    assert_eq!(bernoulli_numbers(120), first);
}

/// `B_{k,chi} = N^{k-1} sum_{a=1}^{N} chi(a) B_k(a/N)`.
fn generalized_oracle(k: usize, field: &covolume_core::QuadField) -> ExactRational {
    let n = field.disc_abs();
    let scale = ExactRational::from_integer(BigInt::from(n).pow(k as u32 - 1));
    let sum: ExactRational = (1..=n)
        .filter(|&a| field.character(a) != 0)
        .map(|a| {
            let x = ExactRational::new(a, n).unwrap();
            ExactRational::from(field.character(a) as i64) * bernoulli_polynomial_value(k, &x)
        })
        .sum();
    scale * sum
}

#[test]
fn generalized_parity_vanishing() {
    for field in fields_up_to(200) {
        for k in (2..=40).step_by(2) {
            assert!(generalized_bernoulli(k, field.disc_signed()).unwrap().is_zero(), "{field} k={k}");
        }
    }
}

#[test]
fn generalized_matches_polynomial_sum() {
    for field in fields_up_to(60) {
        for k in (1..=15).step_by(2) {
            assert_eq!(generalized_bernoulli(k, field.disc_signed()).unwrap(), generalized_oracle(k, &field), "{field} k={k}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// `B_k(1 - x) = (-1)^k B_k(x)`.
    #[test]
    fn polynomial_reflection(k in 0usize..30, num in -50i64..50, den in 1i64..30) {
        let x = ExactRational::new(num, den).unwrap();
        let left = bernoulli_polynomial_value(k, &(ExactRational::one() - x.clone()));
        let right = bernoulli_polynomial_value(k, &x);
        prop_assert_eq!(left, if k % 2 == 0 { right } else { -right });
    }

    /// `B_k(x + 1) - B_k(x) = k x^{k-1}`.
    #[test]
    fn polynomial_difference(k in 1usize..30, num in -50i64..50, den in 1i64..30) {
        let x = ExactRational::new(num, den).unwrap();
        let diff = bernoulli_polynomial_value(k, &(x.clone() + ExactRational::one())) - bernoulli_polynomial_value(k, &x);
        prop_assert_eq!(diff, ExactRational::from(k as i64) * x.pow(k as i32 - 1).unwrap());
    }
}
