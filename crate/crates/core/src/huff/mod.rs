//! Huff's configurations: the four axis points `(0, +-a)`, `(0, +-b)` plus
//! x-axis points `(x, 0)` with `x^2 + a^2` and `x^2 + b^2` both rational
//! squares. Such `x` are rational points of a genus-1 curve; new ones come
//! from the group law on a Weierstrass model of it.

mod curve;

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

pub use curve::{concordant_reduction, CurvePoint, WeierstrassCurve};

use crate::arith::{rational_square_root, Rational};
use crate::error::{Error, Result};
use crate::rds::{PlanePoint, RationalDistanceSet};

/// A pair of nonzero rationals with `|a| != |b|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HuffInstance {
    a: Rational,
    b: Rational,
}

impl HuffInstance {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::domain("Huff parameters must be nonzero"));
        }
        if a.abs() == b.abs() {
            return Err(Error::domain("Huff parameters need |a| != |b|"));
        }
        Ok(HuffInstance { a, b })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }
}

/// A solution of `x^2 + a^2 = u^2`, `x^2 + b^2 = v^2` with `u, v >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HuffPoint {
    pub x: Rational,
    pub u: Rational,
    pub v: Rational,
}

impl HuffPoint {
    /// `x = 0` (or a vanishing `u`/`v`) only reproduces axis points.
    pub fn is_degenerate(&self) -> bool {
        self.x.is_zero() || self.u.is_zero() || self.v.is_zero()
    }

    pub fn satisfies(&self, inst: &HuffInstance) -> bool {
        let x2 = &self.x * &self.x;
        &x2 + &inst.a * &inst.a == &self.u * &self.u && x2 + &inst.b * &inst.b == &self.v * &self.v
    }
}

/// `Some` iff both `x^2 + a^2` and `x^2 + b^2` are rational squares.
pub fn huff_verify(inst: &HuffInstance, x: &Rational) -> Option<HuffPoint> {
    let x2 = x * x;
    let u = rational_square_root(&(&x2 + &inst.a * &inst.a))?;
    let v = rational_square_root(&(x2 + &inst.b * &inst.b))?;
    Some(HuffPoint { x: x.clone(), u, v })
}

/// Every nonzero `x = p/q` with `|p|, q <= height` passing [`huff_verify`],
/// ascending.
pub fn huff_search(inst: &HuffInstance, height: u32) -> Result<Vec<HuffPoint>> {
    if height < 1 {
        return Err(Error::domain("height bound must be at least 1"));
    }
    let h = height as i64;
    let mut xs = BTreeSet::new();
    for q in 1..=h {
        for p in -h..=h {
            if p != 0 {
                xs.insert(Rational::new(p.into(), q.into()));
            }
        }
    }
    Ok(xs.iter().filter_map(|x| huff_verify(inst, x)).collect())
}

/// A finite cycle reached while adding the seed to itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionReport {
    /// Smallest `n >= 1` with `n P = O`.
    pub order: u32,
    /// The x-values of the multiples `P, 2P, ...` that map back.
    pub cycle: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generation {
    pub points: Vec<HuffPoint>,
    pub torsion: Option<TorsionReport>,
    /// The highest multiple computed.
    pub multiples_computed: u32,
}

/// Walks `2P, 3P, ...` from the seed's image on the Weierstrass model and
/// collects up to `n` new non-degenerate points (distinct x, different from
/// the seed's). Stops with a torsion report if some multiple is `O`.
pub fn generate_points(inst: &HuffInstance, seed: &HuffPoint, n: usize) -> Result<Generation> {
    if !seed.satisfies(inst) || seed.u.is_negative() || seed.v.is_negative() {
        return Err(Error::domain("seed is not a point of the Huff system"));
    }
    let mut generation = Generation { points: Vec::new(), torsion: None, multiples_computed: 1 };
    if n == 0 {
        return Ok(generation);
    }
    let curve = concordant_reduction(inst)?;
    let p = curve.forward(seed)?;
    let mut seen = BTreeSet::from([seed.x.clone()]);
    let mut cycle = vec![seed.x.clone()];
    let mut q = p.clone();
    let max_multiple = 8 * n as u32 + 16;
    for m in 2..=max_multiple {
        q = curve.add(&q, &p);
        generation.multiples_computed = m;
        if q.is_infinity() {
            generation.torsion = Some(TorsionReport { order: m, cycle });
            generation.points.clear();
            return Ok(generation);
        }
        if let Some(hp) = curve.backward(&q)? {
            cycle.push(hp.x.clone());
            if !hp.is_degenerate() && seen.insert(hp.x.clone()) {
                generation.points.push(hp);
                if generation.points.len() == n {
                    break;
                }
            }
        }
    }
    Ok(generation)
}

/// `{(0,a), (0,-a), (0,b), (0,-b)} + {(x_i, 0)}` as a verified rational set.
/// Degenerate and repeated x-values are skipped.
pub fn emit_rds(inst: &HuffInstance, points: &[HuffPoint]) -> Result<RationalDistanceSet> {
    if let Some(bad) = points.iter().find(|p| !p.satisfies(inst)) {
        return Err(Error::domain(format!("x = {} is not a Huff point", bad.x)));
    }
    let zero = Rational::zero();
    let mut out = vec![
        PlanePoint::rational(zero.clone(), inst.a.clone()),
        PlanePoint::rational(zero.clone(), -inst.a.clone()),
        PlanePoint::rational(zero.clone(), inst.b.clone()),
        PlanePoint::rational(zero.clone(), -inst.b.clone()),
    ];
    let xs: BTreeSet<&Rational> = points.iter().filter(|p| !p.is_degenerate()).map(|p| &p.x).collect();
    out.extend(xs.into_iter().map(|x| PlanePoint::rational(x.clone(), zero.clone())));
    RationalDistanceSet::verified(out, 1)
        .map_err(|e| Error::integrity(format!("Huff configuration is not rational: {e}")))
}
