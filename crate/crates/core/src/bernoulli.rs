//! Bernoulli numbers, Bernoulli polynomials and generalized Bernoulli numbers
//! of quadratic Kronecker characters.
//!
//! Convention: `B_1 = -1/2`, i.e. the numbers are the Taylor coefficients of
//! `t / (e^t - 1)`. Only even-index `B_k` and odd-index `B_{k,chi}` enter the
//! covolume formulas, so the sign of `B_1` never reaches a covolume.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use spin::RwLock;

use crate::error::{Error, Result};
use crate::quadfield::{is_fundamental_discriminant, kronecker_symbol};
use crate::rational::ExactRational;

/// Largest index stored in the process-wide table. Larger indices are
/// computed on demand and not retained.
pub const DEFAULT_MAX_CACHED: usize = 200;

/// Memoized table of Bernoulli numbers; entry `k` is `B_k`.
#[derive(Debug, Clone)]
pub struct BernoulliCache {
    table: Vec<ExactRational>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self { table: vec![ExactRational::one()] }
    }

    /// A table holding `B_0 ..= B_max`.
    pub fn up_to(max: usize) -> Self {
        let mut cache = Self::new();
        cache.extend_to(max);
        cache
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn get(&self, k: usize) -> Option<&ExactRational> {
        self.table.get(k)
    }

    pub fn as_slice(&self) -> &[ExactRational] {
        &self.table
    }

    /// Fills the table through index `max` with the recurrence
    /// `sum_{i=0}^{m} C(m+1, i) B_i = 0`.
    pub fn extend_to(&mut self, max: usize) {
        while self.table.len() <= max {
            let m = self.table.len();
            let value = if m >= 3 && m % 2 == 1 {
                ExactRational::zero()
            } else {
                let row = binomial_row(m + 1);
                let mut acc = ExactRational::zero();
                for (i, b) in self.table.iter().enumerate() {
                    if !b.is_zero() {
                        acc += ExactRational::from_integer(row[i].clone()) * b;
                    }
                }
                -acc * ExactRational::new(1, m as i64 + 1).expect("m + 1 > 0")
            };
            self.table.push(value);
        }
    }
}

/// `[C(n, 0), ..., C(n, n)]`.
pub(crate) fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for i in 0..n {
        c = c * (n - i) / (i + 1);
        row.push(c.clone());
    }
    row
}

static CACHE: RwLock<BernoulliCache> = RwLock::new(BernoulliCache { table: Vec::new() });

/// `B_k` with `B_1 = -1/2`.
pub fn bernoulli_number(k: usize) -> ExactRational {
    if let Some(b) = CACHE.read().get(k) {
        return b.clone();
    }
    if k > DEFAULT_MAX_CACHED {
        return BernoulliCache::up_to(k).table.swap_remove(k);
    }
    let mut cache = CACHE.write();
    if cache.table.is_empty() {
        cache.table.push(ExactRational::one());
    }
    cache.extend_to(k);
    cache.table[k].clone()
}

/// `B_0 ..= B_max` as one vector.
pub fn bernoulli_numbers(max: usize) -> Vec<ExactRational> {
    if max <= DEFAULT_MAX_CACHED {
        bernoulli_number(max);
        return CACHE.read().table[..=max].to_vec();
    }
    BernoulliCache::up_to(max).table
}

/// `B_k(x) = sum_{i=0}^{k} C(k, i) B_i x^{k-i}`.
pub fn bernoulli_polynomial_value(k: usize, x: &ExactRational) -> ExactRational {
    let bs = bernoulli_numbers(k);
    let row = binomial_row(k);
    // Horner in x over coefficients C(k,i) B_i, highest power first.
    let mut acc = ExactRational::zero();
    for i in 0..=k {
        acc = acc * x + ExactRational::from_integer(row[i].clone()) * &bs[i];
    }
    acc
}

static GENERALIZED: RwLock<BTreeMap<(i64, usize), ExactRational>> = RwLock::new(BTreeMap::new());

/// Generalized Bernoulli number `B_{k,chi_D}` for the Kronecker character of
/// the imaginary quadratic fundamental discriminant `disc`.
///
/// Evaluates `N^{k-1} sum_{a=1}^{N} chi(a) B_k(a/N)` with `N = |disc|`,
/// regrouped as `sum_i C(k,i) B_i N^{i-1} S_{k-i}` where
/// `S_j = sum_a chi(a) a^j`.
pub fn generalized_bernoulli(k: usize, disc: i64) -> Result<ExactRational> {
    if disc >= 0 || !is_fundamental_discriminant(disc) {
        return Err(Error::NonFundamentalDiscriminant(disc));
    }
    if k == 0 {
        return Err(Error::InvalidInput("generalized Bernoulli index must be positive"));
    }
    if let Some(v) = GENERALIZED.read().get(&(disc, k)) {
        return Ok(v.clone());
    }
    let value = generalized_bernoulli_uncached(k, disc)?;
    GENERALIZED.write().entry((disc, k)).or_insert_with(|| value.clone());
    Ok(value)
}

fn generalized_bernoulli_uncached(k: usize, disc: i64) -> Result<ExactRational> {
    // An odd character kills every even index.
    if k % 2 == 0 {
        return Ok(ExactRational::zero());
    }
    let modulus = disc.unsigned_abs();
    let mut power_sums = vec![BigInt::zero(); k + 1];
    for a in 1..modulus {
        let chi = kronecker_symbol(disc, a)?;
        if chi == 0 {
            continue;
        }
        let base = BigInt::from(a);
        let mut p = BigInt::one();
        for sum in power_sums.iter_mut() {
            if chi > 0 {
                *sum += &p;
            } else {
                *sum -= &p;
            }
            p *= &base;
        }
    }
    let bs = bernoulli_numbers(k);
    let row = binomial_row(k);
    let n = BigInt::from(modulus);
    let mut acc = ExactRational::zero();
    // N^{i-1}, starting at 1/N for i = 0.
    let mut n_pow = ExactRational::new(1, modulus as i64)?;
    let n_rat = ExactRational::from_integer(n);
    for i in 0..=k {
        if !bs[i].is_zero() && !power_sums[k - i].is_zero() {
            acc += ExactRational::from_integer(&row[i] * &power_sums[k - i]) * &bs[i] * &n_pow;
        }
        n_pow *= &n_rat;
    }
    Ok(acc)
}
