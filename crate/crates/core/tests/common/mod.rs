//! Oracles shared by the integration tests. They recompute facts with
//! plain big-integer checks instead of the library's predicates.
#![allow(dead_code)]

use distsurf::arith::{Field, QuadExt, Rational};
use distsurf::rds::{collinear, grid_search_rational_sets, GridSearch, PlanePoint, RationalDistanceSet};
use num_bigint::BigInt;
use num_traits::Signed;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn is_square_int(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let s = n.sqrt();
    &s * &s == *n
}

/// Rational square test on numerator and denominator separately.
pub fn oracle_is_rational_square(q: &QuadExt) -> bool {
    q.is_rational() && is_square_int(q.a().numer()) && is_square_int(q.a().denom())
}

pub fn oracle_dist2(p: &PlanePoint, q: &PlanePoint) -> QuadExt {
    let dx = p.x().clone() - q.x().clone();
    let dy = p.y().clone() - q.y().clone();
    dx.clone() * dx + dy.clone() * dy
}

pub fn oracle_sqrt(q: &QuadExt) -> Rational {
    assert!(oracle_is_rational_square(q), "{q} is not a rational square");
    Rational::new(q.a().numer().sqrt(), q.a().denom().sqrt())
}

pub fn oracle_all_distances_rational(points: &[PlanePoint]) -> bool {
    points
        .iter()
        .enumerate()
        .all(|(i, p)| points[i + 1..].iter().all(|q| oracle_is_rational_square(&oracle_dist2(p, q))))
}

pub fn all_collinear(points: &[PlanePoint]) -> bool {
    points.len() < 3
        || points[2..].iter().all(|c| collinear(&points[0], &points[1], c))
}

/// Grid sets of size at least `size` that are not contained in a line.
pub fn oracle_sets(k: u64, height: u32, size: usize) -> Vec<RationalDistanceSet> {
    grid_search_rational_sets(GridSearch { k, height_bound: height, target_size: size })
        .unwrap()
        .into_iter()
        .filter(|s| !all_collinear(s.points()))
        .collect()
}

/// A random non-collinear `n`-subset of `set`, if one is found quickly.
pub fn random_subset<R: Rng>(rng: &mut R, set: &RationalDistanceSet, n: usize) -> Option<Vec<PlanePoint>> {
    for _ in 0..200 {
        let mut pts = set.points().to_vec();
        pts.shuffle(rng);
        pts.truncate(n);
        if !all_collinear(&pts) {
            return Some(pts);
        }
    }
    None
}

/// Distinct random points `(a, b sqrt k)` with small rational `a, b`.
pub fn random_points<R: Rng>(rng: &mut R, k: u64, n: usize) -> Vec<PlanePoint> {
    let mut out: Vec<PlanePoint> = Vec::new();
    while out.len() < n {
        let a = r(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        let b = r(rng.gen_range(-9..=9), rng.gen_range(1..=4));
        let y = QuadExt::new(Rational::from_i64(0), b, k).unwrap();
        let p = PlanePoint::new(QuadExt::rational(a), y).unwrap();
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}
