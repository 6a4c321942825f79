//! Reduced positive definite binary quadratic forms and Gauss composition.
//!
//! The class group of an imaginary quadratic field is modeled by the form
//! class group of its fundamental discriminant. Discriminants here stay far
//! below 2^31, so coefficients are `i64` and intermediate products `i128`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::quadfield::QuadField;

/// The form `a x^2 + b x y + c y^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormClass {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl FormClass {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn is_primitive(&self) -> bool {
        gcd(gcd(self.a, self.b), self.c) == 1
    }

    /// `|b| <= a <= c`, with `b >= 0` if `|b| = a` or `a = c`.
    pub fn is_reduced(&self) -> bool {
        let Self { a, b, c } = *self;
        b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
    }

    /// The unit form of discriminant `disc`.
    pub fn principal(disc: i64) -> Self {
        let b = disc.rem_euclid(2);
        Self { a: 1, b, c: (b * b - disc) / 4 }
    }

    /// The reduced representative of the class of `(a, b, c)`.
    pub fn reduce(self) -> Self {
        let disc = self.discriminant() as i128;
        let (mut a, mut b, mut c) = (self.a as i128, self.b as i128, self.c as i128);
        loop {
            // Bring b into (-a, a].
            if !(-a < b && b <= a) {
                let two_a = 2 * a;
                let mut r = b.rem_euclid(two_a);
                if r > a {
                    r -= two_a;
                }
                b = r;
                c = (b * b - disc) / (4 * a);
            }
            if a > c {
                core::mem::swap(&mut a, &mut c);
                b = -b;
                continue;
            }
            if a == c && b < 0 {
                b = -b;
            }
            break;
        }
        Self { a: a as i64, b: b as i64, c: c as i64 }
    }

    /// Class of the opposite form `(a, -b, c)`.
    pub fn inverse(&self) -> Self {
        Self { a: self.a, b: -self.b, c: self.c }.reduce()
    }

    /// Gauss composition (Shanks' formulation), reduced.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        let (left, right) = (self.discriminant(), other.discriminant());
        if left != right {
            return Err(Error::DiscriminantMismatch { left, right });
        }
        let disc = left as i128;
        let (f1, f2) = if self.a > other.a { (other, self) } else { (self, other) };
        let (a1, b1) = (f1.a as i128, f1.b as i128);
        let (a2, b2, c2) = (f2.a as i128, f2.b as i128, f2.c as i128);
        let s = (b1 + b2) / 2;
        let n = b2 - s;
        let (y1, d) = if a2 % a1 == 0 {
            (0, a1)
        } else {
            let (g, u, _) = xgcd(a2, a1);
            (u, g)
        };
        let (x2, y2, d1) = if s % d == 0 {
            (0, -1, d)
        } else {
            let (g, u, v) = xgcd(s, d);
            (u, -v, g)
        };
        let v1 = a1 / d1;
        let v2 = a2 / d1;
        let r = (y1 * y2 * n - x2 * c2).rem_euclid(v1);
        let b3 = b2 + 2 * v2 * r;
        let a3 = v1 * v2;
        let c3 = (b3 * b3 - disc) / (4 * a3);
        debug_assert_eq!(b3 * b3 - 4 * a3 * c3, disc);
        Ok(Self { a: a3 as i64, b: b3 as i64, c: c3 as i64 }.reduce())
    }

    /// `self^exp` by square-and-multiply.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut result = Self::principal(self.discriminant());
        let mut base = *self;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.compose(&base).expect("same discriminant");
            }
            base = base.compose(&base).expect("same discriminant");
            exp >>= 1;
        }
        result
    }

    /// Order of the class in the group.
    pub fn order(&self) -> u64 {
        let identity = Self::principal(self.discriminant());
        let mut g = self.reduce();
        let mut k = 1;
        while g != identity {
            g = g.compose(self).expect("same discriminant");
            k += 1;
        }
        k
    }
}

impl fmt::Display for FormClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

/// The form class group of a field's discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGroup {
    field: QuadField,
    classes: Vec<FormClass>,
}

impl ClassGroup {
    /// Enumerates reduced primitive forms with `a <= sqrt(|D|/3)`.
    pub fn reduced_forms(field: &QuadField) -> Self {
        let disc = field.disc_signed();
        let n = field.disc_abs() as i64;
        let mut classes = Vec::new();
        let mut a = 1i64;
        while 3 * a * a <= n {
            for b in -a + 1..=a {
                if (b - disc).rem_euclid(2) != 0 {
                    continue;
                }
                let num = b * b - disc;
                if num % (4 * a) != 0 {
                    continue;
                }
                let form = FormClass::new(a, b, num / (4 * a));
                if form.is_reduced() && form.is_primitive() {
                    classes.push(form);
                }
            }
            a += 1;
        }
        classes.sort();
        Self { field: field.clone(), classes }
    }

    pub fn field(&self) -> &QuadField {
        &self.field
    }

    pub fn classes(&self) -> &[FormClass] {
        &self.classes
    }

    /// Class number.
    pub fn h(&self) -> u64 {
        self.classes.len() as u64
    }

    pub fn identity(&self) -> FormClass {
        FormClass::principal(self.field.disc_signed())
    }

    fn check(&self, g: &FormClass) -> Result<()> {
        let (left, right) = (self.field.disc_signed(), g.discriminant());
        if left != right {
            return Err(Error::DiscriminantMismatch { left, right });
        }
        Ok(())
    }

    pub fn compose(&self, g1: &FormClass, g2: &FormClass) -> Result<FormClass> {
        self.check(g1)?;
        self.check(g2)?;
        g1.compose(g2)
    }

    pub fn contains(&self, g: &FormClass) -> bool {
        self.classes.binary_search(g).is_ok()
    }

    /// `#{g : g^m = 1}`.
    pub fn torsion_count(&self, m: u64) -> u64 {
        assert!(m >= 1, "torsion order must be positive");
        let identity = self.identity();
        self.classes.iter().filter(|g| g.pow(m) == identity).count() as u64
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.classes.iter().map(FormClass::order).fold(1, |acc, o| acc / gcd(acc as i64, o as i64) as u64 * o)
    }

    /// Subgroup generated by `generators`, by closing under composition.
    pub fn closure(&self, generators: &[FormClass]) -> Vec<FormClass> {
        let mut seen: BTreeSet<FormClass> = BTreeSet::new();
        let identity = self.identity();
        seen.insert(identity);
        let mut frontier = vec![identity];
        while let Some(g) = frontier.pop() {
            for s in generators {
                let next = g.compose(s).expect("same discriminant");
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
        seen.into_iter().collect()
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `(g, u, v)` with `u a + v b = g = gcd(a, b) >= 0`.
fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}
