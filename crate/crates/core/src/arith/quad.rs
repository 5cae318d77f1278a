use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::rational::{rational_sign, squarefree_decompose, Rational};
use super::Field;
use crate::error::{Error, Result};

/// An element `a + b*sqrt(k)` of the real quadratic field `Q(sqrt k)`.
///
/// `k` is squarefree and positive. Values with `b = 0` are plain rationals
/// and are stored with `k = 1`; such values combine with elements of any
/// field `Q(sqrt k)`. Combining two irrational values with different `k`
/// is a logic error and panics; callers validate contexts up front.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
    k: u64,
}

impl QuadExt {
    /// Builds `a + b*sqrt(n)`, reducing `n` to its squarefree part.
    pub fn new(a: Rational, b: Rational, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("Q(sqrt k) needs k >= 1"));
        }
        let n = i64::try_from(n).map_err(|_| Error::domain("k too large"))?;
        let (s, f) = squarefree_decompose(n)?;
        Ok(Self::canonical(a, b * Rational::from_integer(f.into()), s as u64))
    }

    fn canonical(a: Rational, b: Rational, k: u64) -> Self {
        if k == 1 {
            QuadExt { a: a + b, b: Rational::zero(), k: 1 }
        } else if b.is_zero() {
            QuadExt { a, b, k: 1 }
        } else {
            QuadExt { a, b, k }
        }
    }

    pub fn rational(q: Rational) -> Self {
        QuadExt { a: q, b: Rational::zero(), k: 1 }
    }

    /// `sqrt(k)` for squarefree `k`.
    pub fn sqrt_of(k: u64) -> Result<Self> {
        Self::new(Rational::zero(), Rational::from_integer(1.into()), k)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// The squarefree radicand; 1 for rational values.
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// True when the value is `r*sqrt(k)` for a rational `r` (the form of
    /// normalized y-coordinates).
    pub fn is_pure_surd(&self) -> bool {
        self.a.is_zero()
    }

    /// Whether `self` and `other` live in a common field.
    pub fn compatible(&self, other: &QuadExt) -> bool {
        self.k == 1 || other.k == 1 || self.k == other.k
    }

    fn joint_k(&self, other: &QuadExt) -> u64 {
        assert!(
            self.compatible(other),
            "mixing Q(sqrt {}) and Q(sqrt {})",
            self.k,
            other.k
        );
        self.k.max(other.k)
    }

    /// Galois conjugate `a - b*sqrt(k)`.
    pub fn galois_conjugate(&self) -> Self {
        QuadExt { a: self.a.clone(), b: -self.b.clone(), k: self.k }
    }

    /// Field norm `a^2 - k b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(self.k.into())
    }

    /// Sign of the real number `a + b*sqrt(k)`.
    pub fn signum(&self) -> i8 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        if sb == 0 || sa == sb {
            return if sa == 0 { sb } else { sa };
        }
        if sa == 0 {
            return sb;
        }
        // opposite signs: the larger magnitude wins; a^2 vs k b^2
        let kb2 = &self.b * &self.b * Rational::from_integer(self.k.into());
        match (&self.a * &self.a).cmp(&kb2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => unreachable!("k squarefree > 1 so a^2 = k b^2 forces a = b = 0"),
        }
    }

    /// Numeric comparison as real numbers.
    pub fn cmp_real(&self, other: &QuadExt) -> Ordering {
        (self.clone() - other.clone()).signum().cmp(&0)
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if self.b.is_negative() {
                write!(f, " - {}*sqrt({})", -self.b.clone(), self.k)
            } else {
                write!(f, " + {}*sqrt({})", self.b, self.k)
            }
        } else {
            write!(f, "{}*sqrt({})", self.b, self.k)
        }
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        let k = self.joint_k(&rhs);
        QuadExt::canonical(self.a + rhs.a, self.b + rhs.b, k)
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        let k = self.joint_k(&rhs);
        QuadExt::canonical(self.a - rhs.a, self.b - rhs.b, k)
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        let k = self.joint_k(&rhs);
        let kq = Rational::from_integer(k.into());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * kq;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        QuadExt::canonical(a, b, k)
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -self.a, b: -self.b, k: self.k }
    }
}

impl Field for QuadExt {
    fn zero() -> Self {
        QuadExt::rational(Rational::zero())
    }
    fn one() -> Self {
        QuadExt::rational(Rational::from_integer(1.into()))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        // (a + b sqrt k)^-1 = (a - b sqrt k) / (a^2 - k b^2); the norm only
        // vanishes at zero because k is squarefree and > 1 (or b = 0).
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(QuadExt::canonical(&self.a / &n, -(&self.b / &n), self.k))
    }
    fn from_rational(q: Rational) -> Self {
        QuadExt::rational(q)
    }
    fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }
}
