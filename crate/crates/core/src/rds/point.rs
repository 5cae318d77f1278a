use std::fmt;

use crate::arith::{QuadExt, Rational};
use crate::error::{Error, Result};

/// A point of the plane with coordinates in a common `Q(sqrt k)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePoint {
    x: QuadExt,
    y: QuadExt,
}

impl PlanePoint {
    pub fn new(x: QuadExt, y: QuadExt) -> Result<Self> {
        if !x.compatible(&y) {
            return Err(Error::domain(format!(
                "coordinates in Q(sqrt {}) and Q(sqrt {})",
                x.k(),
                y.k()
            )));
        }
        Ok(PlanePoint { x, y })
    }

    pub fn rational(x: Rational, y: Rational) -> Self {
        PlanePoint { x: QuadExt::rational(x), y: QuadExt::rational(y) }
    }

    /// Shorthand for integer coordinates.
    pub fn int(x: i64, y: i64) -> Self {
        Self::rational(Rational::from_integer(x.into()), Rational::from_integer(y.into()))
    }

    pub fn origin() -> Self {
        Self::int(0, 0)
    }

    pub fn x(&self) -> &QuadExt {
        &self.x
    }

    pub fn y(&self) -> &QuadExt {
        &self.y
    }

    /// The radicand this point needs; 1 for rational points.
    pub fn k(&self) -> u64 {
        self.x.k().max(self.y.k())
    }

    pub(crate) fn sub(&self, other: &PlanePoint) -> (QuadExt, QuadExt) {
        (self.x.clone() - other.x.clone(), self.y.clone() - other.y.clone())
    }
}

impl fmt::Debug for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The one `k` shared by all points (1 when all are rational).
pub fn common_k(points: &[PlanePoint]) -> Result<u64> {
    let mut k = 1;
    for p in points {
        let pk = p.k();
        if pk != 1 {
            if k != 1 && k != pk {
                return Err(Error::domain(format!(
                    "points mix Q(sqrt {k}) and Q(sqrt {pk})"
                )));
            }
            k = pk;
        }
    }
    Ok(k)
}

/// Squared Euclidean distance.
pub fn dist2(p: &PlanePoint, q: &PlanePoint) -> Result<QuadExt> {
    common_k(&[p.clone(), q.clone()])?;
    let (dx, dy) = p.sub(q);
    Ok(dx.clone() * dx + dy.clone() * dy)
}
