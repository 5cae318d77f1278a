use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::quad::QuadExt;
use super::rational::Rational;
use super::Field;

/// An element `re + i*im` of `Q(sqrt k)(i)` with `re, im` in `Q(sqrt k)`.
///
/// Since `Q(sqrt k)` is real, `re^2 + im^2` vanishes only at zero and the
/// structure is a field.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussQuad {
    pub re: QuadExt,
    pub im: QuadExt,
}

impl GaussQuad {
    pub fn new(re: QuadExt, im: QuadExt) -> Self {
        GaussQuad { re, im }
    }

    pub fn real(re: QuadExt) -> Self {
        GaussQuad { re, im: QuadExt::zero() }
    }

    pub fn i() -> Self {
        GaussQuad { re: QuadExt::zero(), im: QuadExt::one() }
    }

    /// Complex conjugation `re - i*im`.
    pub fn conjugate(&self) -> Self {
        GaussQuad { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> QuadExt {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

/// Free-function form of [`GaussQuad::conjugate`].
pub fn gauss_conjugate(e: &GaussQuad) -> GaussQuad {
    e.conjugate()
}

impl fmt::Debug for GaussQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for GaussQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "({})*i", self.im),
            (false, false) => write!(f, "{} + ({})*i", self.re, self.im),
        }
    }
}

impl Add for GaussQuad {
    type Output = GaussQuad;
    fn add(self, rhs: GaussQuad) -> GaussQuad {
        GaussQuad { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GaussQuad {
    type Output = GaussQuad;
    fn sub(self, rhs: GaussQuad) -> GaussQuad {
        GaussQuad { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GaussQuad {
    type Output = GaussQuad;
    fn mul(self, rhs: GaussQuad) -> GaussQuad {
        let re = self.re.clone() * rhs.re.clone() - self.im.clone() * rhs.im.clone();
        let im = self.re * rhs.im + self.im * rhs.re;
        GaussQuad { re, im }
    }
}

impl Neg for GaussQuad {
    type Output = GaussQuad;
    fn neg(self) -> GaussQuad {
        GaussQuad { re: -self.re, im: -self.im }
    }
}

impl Field for GaussQuad {
    fn zero() -> Self {
        GaussQuad::real(QuadExt::zero())
    }
    fn one() -> Self {
        GaussQuad::real(QuadExt::one())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        let c = self.conjugate();
        Some(GaussQuad { re: c.re * n.clone(), im: c.im * n })
    }
    fn from_rational(q: Rational) -> Self {
        GaussQuad::real(QuadExt::rational(q))
    }
    fn as_rational(&self) -> Option<Rational> {
        if self.is_real() {
            self.re.as_rational()
        } else {
            None
        }
    }
}

impl From<QuadExt> for GaussQuad {
    fn from(re: QuadExt) -> Self {
        GaussQuad::real(re)
    }
}
