use num_traits::Signed;

use super::{HuffInstance, HuffPoint};
use crate::arith::{Field, Rational};
use crate::error::{Error, Result};

/// A point of a Weierstrass cubic, projective point at infinity included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl CurvePoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }
}

/// `Y^2 = X^3 + c2 X^2 + c1 X + c0` together with rational maps to and from
/// the Huff system of its instance.
///
/// For the instance `(a, b)` the cubic is `Y^2 = X (X + 4a^2) (X + 4b^2)`.
/// With `t = u + x` (never 0 because `u^2 - x^2 = a^2`) and `W = 2tv`, the
/// first conic is parametrized by `t` and the system becomes the quartic
/// `W^2 = t^4 + (4b^2 - 2a^2) t^2 + a^4`. Setting `S = W + t^2` gives
/// `X = 2S - 2a^2` and `Y = 2t (2S + 4b^2 - 2a^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassCurve {
    pub c2: Rational,
    pub c1: Rational,
    pub c0: Rational,
    a2: Rational,
    b2: Rational,
}

/// The Weierstrass model of the Huff curve `C(a^2, b^2)`.
pub fn concordant_reduction(inst: &HuffInstance) -> Result<WeierstrassCurve> {
    let a2 = inst.a() * inst.a();
    let b2 = inst.b() * inst.b();
    if a2 == b2 {
        return Err(Error::domain("degenerate Huff instance: a = +-b"));
    }
    let four = Rational::from_integer(4.into());
    Ok(WeierstrassCurve {
        c2: &four * (&a2 + &b2),
        c1: &four * &four * &a2 * &b2,
        c0: Rational::zero(),
        a2,
        b2,
    })
}

impl WeierstrassCurve {
    fn rhs(&self, x: &Rational) -> Rational {
        x * x * x + &self.c2 * x * x + &self.c1 * x + &self.c0
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => y * y == self.rhs(x),
        }
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: x.clone(), y: -y.clone() },
        }
    }

    /// Chord-tangent addition.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let slope = if x1 != x2 {
            (y2 - y1) / (x2 - x1)
        } else if y1 == y2 && !y1.is_zero() {
            let three = Rational::from_integer(3.into());
            let two = Rational::from_integer(2.into());
            (three * x1 * x1 + &two * &self.c2 * x1 + &self.c1) / (two * y1)
        } else {
            return CurvePoint::Infinity;
        };
        let x3 = &slope * &slope - &self.c2 - x1 - x2;
        let y3 = slope * (x1 - &x3) - y1;
        CurvePoint::Affine { x: x3, y: y3 }
    }

    pub fn multiply(&self, p: &CurvePoint, mut n: u64) -> CurvePoint {
        let mut acc = CurvePoint::Infinity;
        let mut base = p.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.add(&base, &base);
            }
        }
        acc
    }

    fn c(&self) -> Rational {
        Rational::from_integer(4.into()) * &self.b2 - Rational::from_integer(2.into()) * &self.a2
    }

    /// Image of a Huff point on the cubic.
    pub fn forward(&self, p: &HuffPoint) -> Result<CurvePoint> {
        let two = Rational::from_integer(2.into());
        let t = &p.u + &p.x;
        if t.is_zero() {
            return Err(Error::domain("u + x = 0 is impossible on the Huff curve"));
        }
        let w = &two * &t * &p.v;
        let s = w + &t * &t;
        let x = &two * &s - &two * &self.a2;
        let y = &two * &t * (&two * &s + self.c());
        let out = CurvePoint::Affine { x, y };
        if !self.contains(&out) {
            return Err(Error::integrity("forward image is off the cubic"));
        }
        Ok(out)
    }

    /// The Huff point of a curve point, canonical signs `u, v >= 0`.
    /// Undefined (`None`) at `O` and at the 2-torsion points.
    pub fn backward(&self, p: &CurvePoint) -> Result<Option<HuffPoint>> {
        let (x, y) = match p {
            CurvePoint::Infinity => return Ok(None),
            CurvePoint::Affine { x, y } => (x, y),
        };
        let two = Rational::from_integer(2.into());
        let denom = x + &two * &self.a2 + self.c();
        if denom.is_zero() || y.is_zero() {
            return Ok(None);
        }
        let t = y / (&two * denom);
        let s = (x + &two * &self.a2) / &two;
        let w = s - &t * &t;
        let a2_over_t = &self.a2 / &t;
        let hx = (&t - &a2_over_t) / &two;
        let hu = (&t + &a2_over_t) / &two;
        let hv = w / (two * &t);
        let hp = HuffPoint { x: hx, u: hu.abs(), v: hv.abs() };
        let x2 = &hp.x * &hp.x;
        if &x2 + &self.a2 != &hp.u * &hp.u || x2 + &self.b2 != &hp.v * &hp.v {
            return Err(Error::integrity("backward image violates the Huff equations"));
        }
        Ok(Some(hp))
    }
}

impl WeierstrassCurve {
    /// Discriminant-style smoothness test: the cubic has three distinct
    /// roots `0, -4a^2, -4b^2`.
    pub fn is_smooth(&self) -> bool {
        !self.a2.is_zero() && !self.b2.is_zero() && self.a2 != self.b2
    }

}
