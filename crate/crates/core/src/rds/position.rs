use super::point::PlanePoint;
use super::set::RationalDistanceSet;
use crate::arith::{Field, QuadExt};
use crate::error::{Error, Result};

/// Whether `p, q, r` lie on a line. Repeated points count as collinear.
///
/// All three points must share one `Q(sqrt k)`.
pub fn collinear(p: &PlanePoint, q: &PlanePoint, r: &PlanePoint) -> bool {
    let (ux, uy) = q.sub(p);
    let (vx, vy) = r.sub(p);
    (ux * vy - uy * vx).is_zero()
}

fn det3(m: [[QuadExt; 3]; 3]) -> QuadExt {
    let [[a, b, c], [d, e, f], [g, h, i]] = m;
    a * (e.clone() * i.clone() - f.clone() * h.clone()) - b * (d.clone() * i - f * g.clone())
        + c * (d * h - e * g)
}

/// Whether four points lie on a circle, via the lifting determinant on
/// `(x^2 + y^2, x, y, 1)`. The points must be pairwise distinct with no
/// three collinear.
pub fn concyclic(p: &PlanePoint, q: &PlanePoint, r: &PlanePoint, s: &PlanePoint) -> Result<bool> {
    let pts = [p, q, r, s];
    for a in 0..4 {
        for b in a + 1..4 {
            if pts[a] == pts[b] {
                return Err(Error::domain("concyclic needs four distinct points"));
            }
            for c in b + 1..4 {
                if collinear(pts[a], pts[b], pts[c]) {
                    return Err(Error::domain("concyclic needs no three collinear points"));
                }
            }
        }
    }
    // subtracting the row of p reduces the 4x4 determinant to 3x3
    let row = |t: &PlanePoint| {
        let (dx, dy) = t.sub(p);
        [dx.clone() * dx.clone() + dy.clone() * dy.clone(), dx, dy]
    };
    Ok(det3([row(q), row(r), row(s)]).is_zero())
}

/// Result of a general-position search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GeneralPosition {
    /// Indices into the input, ascending.
    Found(Vec<usize>),
    /// The whole search space was explored without success.
    Exhausted,
    /// The node budget ran out first; nothing is claimed.
    CapReached,
}

/// Finds `n` points with no 3 collinear and no 4 concyclic by a depth-first
/// scan in input order with backtracking, visiting at most `cap` nodes.
pub fn select_general_position(
    set: &RationalDistanceSet,
    n: usize,
    cap: usize,
) -> Result<GeneralPosition> {
    if !set.is_verified() {
        return Err(Error::domain("select_general_position needs a verified rational set"));
    }
    if set.len() < n {
        return Err(Error::domain(format!(
            "cannot choose {n} points from a set of {}",
            set.len()
        )));
    }
    let points = set.points();
    let mut chosen = Vec::with_capacity(n);
    let mut budget = cap;
    match extend(points, n, 0, &mut chosen, &mut budget)? {
        true => Ok(GeneralPosition::Found(chosen)),
        false if budget == 0 => Ok(GeneralPosition::CapReached),
        false => Ok(GeneralPosition::Exhausted),
    }
}

fn compatible(points: &[PlanePoint], chosen: &[usize], cand: usize) -> Result<bool> {
    let c = &points[cand];
    for (ai, &a) in chosen.iter().enumerate() {
        for &b in &chosen[ai + 1..] {
            if collinear(&points[a], &points[b], c) {
                return Ok(false);
            }
        }
    }
    for (ai, &a) in chosen.iter().enumerate() {
        for (bi, &b) in chosen.iter().enumerate().skip(ai + 1) {
            for &d in &chosen[bi + 1..] {
                if concyclic(&points[a], &points[b], &points[d], c)? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn extend(
    points: &[PlanePoint],
    n: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    budget: &mut usize,
) -> Result<bool> {
    if chosen.len() == n {
        return Ok(true);
    }
    for cand in start..points.len() {
        if points.len() - cand < n - chosen.len() {
            break;
        }
        if *budget == 0 {
            return Ok(false);
        }
        *budget -= 1;
        if compatible(points, chosen, cand)? {
            chosen.push(cand);
            if extend(points, n, cand + 1, chosen, budget)? {
                return Ok(true);
            }
            chosen.pop();
        }
    }
    Ok(false)
}
