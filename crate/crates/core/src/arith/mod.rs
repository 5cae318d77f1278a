//! Exact scalars: [`Rational`], [`QuadExt`] (elements of `Q(sqrt k)`) and
//! [`GaussQuad`] (elements of `Q(sqrt k)(i)`).

mod gauss;
mod quad;
pub(crate) mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use gauss::{gauss_conjugate, GaussQuad};
pub use quad::QuadExt;
pub use rational::{
    format_rational, parse_rational, rational_square_root, squarefree_decompose, Rational,
};

/// A commutative field with exact arithmetic.
///
/// The polynomial engine is generic over this trait so the same code runs
/// over `Q`, `Q(sqrt k)` and `Q(sqrt k)(i)`.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: Rational) -> Self;
    /// The value as a rational, if it lies in `Q`.
    fn as_rational(&self) -> Option<Rational>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Field for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}
