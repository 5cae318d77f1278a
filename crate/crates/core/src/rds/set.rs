use num_traits::Signed;

use super::point::{common_k, dist2, PlanePoint};
use crate::arith::{rational_square_root, squarefree_decompose, Field, QuadExt, Rational};
use crate::error::{Error, Result};

/// Outcome of checking pairwise distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Rational,
    /// The first pair `(i, j)` (in scan order) whose distance is irrational.
    Counterexample { i: usize, j: usize, dist2: QuadExt },
}

impl Verdict {
    pub fn is_rational(&self) -> bool {
        matches!(self, Verdict::Rational)
    }
}

/// An ordered set of pairwise distinct points in `Q(sqrt k)^2`, optionally
/// known to have all pairwise distances rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalDistanceSet {
    points: Vec<PlanePoint>,
    k: u64,
    verified: bool,
}

fn find_duplicates(points: &[PlanePoint]) -> Option<(usize, usize)> {
    let mut seen = std::collections::HashMap::new();
    for (j, p) in points.iter().enumerate() {
        if let Some(&i) = seen.get(p) {
            return Some((i, j));
        }
        seen.insert(p, j);
    }
    None
}

fn check_k(k: u64) -> Result<()> {
    let signed = i64::try_from(k).map_err(|_| Error::domain("k too large"))?;
    if k == 0 || squarefree_decompose(signed)?.1 != 1 {
        return Err(Error::domain(format!("k = {k} is not a squarefree positive integer")));
    }
    Ok(())
}

impl RationalDistanceSet {
    /// An unverified set. Points must be distinct and live in `Q(sqrt k)`.
    pub fn new(points: Vec<PlanePoint>, k: u64) -> Result<Self> {
        check_k(k)?;
        if let Some(bad) = points.iter().position(|p| p.k() != 1 && p.k() != k) {
            return Err(Error::domain(format!(
                "point {bad} lies in Q(sqrt {}) but the set declares k = {k}",
                points[bad].k()
            )));
        }
        if let Some((i, j)) = find_duplicates(&points) {
            return Err(Error::domain(format!("points {i} and {j} coincide: {:?}", points[i])));
        }
        Ok(RationalDistanceSet { points, k, verified: false })
    }

    /// A set whose pairwise distances are checked to be rational.
    pub fn verified(points: Vec<PlanePoint>, k: u64) -> Result<Self> {
        Self::new(points, k)?.verify()
    }

    /// Checks the pairwise distances, failing with the counterexample.
    pub fn verify(mut self) -> Result<Self> {
        match is_rational_set(&self.points)? {
            Verdict::Rational => {
                self.verified = true;
                Ok(self)
            }
            Verdict::Counterexample { i, j, dist2 } => Err(Error::domain(format!(
                "points {i} and {j} are at irrational distance (dist^2 = {dist2})"
            ))),
        }
    }

    pub fn points(&self) -> &[PlanePoint] {
        &self.points
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn require_verified(&self, op: &str) -> Result<()> {
        if self.verified {
            Ok(())
        } else {
            Err(Error::domain(format!("{op} needs a verified rational set")))
        }
    }
}

/// Rational iff every squared distance lies in `Q` and is a square there.
pub fn is_rational_set(points: &[PlanePoint]) -> Result<Verdict> {
    if points.is_empty() {
        return Err(Error::domain("empty point set"));
    }
    common_k(points)?;
    if let Some((i, j)) = find_duplicates(points) {
        return Err(Error::domain(format!("points {i} and {j} coincide: {:?}", points[i])));
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = dist2(&points[i], &points[j])?;
            let ok = d.as_rational().is_some_and(|q| rational_square_root(&q).is_some());
            if !ok {
                return Ok(Verdict::Counterexample { i, j, dist2: d });
            }
        }
    }
    Ok(Verdict::Rational)
}

/// `p -> M p + t` with `M` a nonzero multiple of an orthogonal matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityTransform {
    pub matrix: [[QuadExt; 2]; 2],
    pub translation: [QuadExt; 2],
}

impl SimilarityTransform {
    pub fn identity() -> Self {
        SimilarityTransform {
            matrix: [[QuadExt::one(), QuadExt::zero()], [QuadExt::zero(), QuadExt::one()]],
            translation: [QuadExt::zero(), QuadExt::zero()],
        }
    }

    pub fn apply(&self, p: &PlanePoint) -> Result<PlanePoint> {
        let [[a, b], [c, d]] = &self.matrix;
        let x = a.clone() * p.x().clone() + b.clone() * p.y().clone() + self.translation[0].clone();
        let y = c.clone() * p.x().clone() + d.clone() * p.y().clone() + self.translation[1].clone();
        PlanePoint::new(x, y)
    }

    /// `M^T M = s I` with `s != 0`.
    pub fn is_similarity(&self) -> bool {
        let [[a, b], [c, d]] = &self.matrix;
        let s1 = a.clone() * a.clone() + c.clone() * c.clone();
        let s2 = b.clone() * b.clone() + d.clone() * d.clone();
        let off = a.clone() * b.clone() + c.clone() * d.clone();
        s1 == s2 && off.is_zero() && !s1.is_zero()
    }

    /// `then(other)` applies `self` first.
    pub fn then(&self, other: &SimilarityTransform) -> SimilarityTransform {
        let m = &other.matrix;
        let n = &self.matrix;
        let mul = |i: usize, j: usize| m[i][0].clone() * n[0][j].clone() + m[i][1].clone() * n[1][j].clone();
        let t = |i: usize| {
            m[i][0].clone() * self.translation[0].clone()
                + m[i][1].clone() * self.translation[1].clone()
                + other.translation[i].clone()
        };
        SimilarityTransform {
            matrix: [[mul(0, 0), mul(0, 1)], [mul(1, 0), mul(1, 1)]],
            translation: [t(0), t(1)],
        }
    }
}

/// Moves anchors `i` and `j` to `(0,0)` and `(1,0)`. The image is reflected
/// across the x-axis when needed so that the first non-anchor point off the
/// x-axis has positive y.
pub fn normalize_set(
    set: &RationalDistanceSet,
    i: usize,
    j: usize,
) -> Result<(RationalDistanceSet, SimilarityTransform)> {
    set.require_verified("normalize_set")?;
    let n = set.len();
    if i >= n || j >= n {
        return Err(Error::domain(format!("anchor index out of range for {n} points")));
    }
    if i == j {
        return Err(Error::domain("anchors must be two different points"));
    }
    let (pi, pj) = (&set.points[i], &set.points[j]);
    let d2 = dist2(pi, pj)?;
    let anchor_ok = d2.as_rational().is_some_and(|q| rational_square_root(&q).is_some());
    if !anchor_ok {
        return Err(Error::domain("anchor distance is not rational"));
    }
    // complex division by d = pj - pi: (p - pi) * conj(d) / |d|^2
    let (dx, dy) = pj.sub(pi);
    let inv = d2.inv().expect("distinct anchors");
    let (a, b) = (dx * inv.clone(), dy * inv);
    let rotate = SimilarityTransform {
        matrix: [[a.clone(), b.clone()], [-b.clone(), a.clone()]],
        translation: [QuadExt::zero(), QuadExt::zero()],
    };
    let mut transform = SimilarityTransform {
        matrix: rotate.matrix.clone(),
        translation: [
            -(a.clone() * pi.x().clone() + b.clone() * pi.y().clone()),
            b * pi.x().clone() - a * pi.y().clone(),
        ],
    };
    let mut images = set
        .points
        .iter()
        .map(|p| transform.apply(p))
        .collect::<Result<Vec<_>>>()?;
    let flip = images
        .iter()
        .enumerate()
        .find(|(idx, p)| *idx != i && *idx != j && !p.y().is_zero())
        .is_some_and(|(_, p)| p.y().signum() < 0);
    if flip {
        let reflect = SimilarityTransform {
            matrix: [[QuadExt::one(), QuadExt::zero()], [QuadExt::zero(), -QuadExt::one()]],
            translation: [QuadExt::zero(), QuadExt::zero()],
        };
        transform = transform.then(&reflect);
        images = set
            .points
            .iter()
            .map(|p| transform.apply(p))
            .collect::<Result<Vec<_>>>()?;
    }
    let k = detect_k(&images)?;
    let out = RationalDistanceSet::new(images, k)?.verify().map_err(|e| {
        Error::integrity(format!("similarity image is no longer rational: {e}"))
    })?;
    Ok((out, transform))
}

/// The squarefree `k` with every point of the form `(r1, r2 sqrt k)`.
///
/// The points must contain `(0,0)` and `(1,0)`. Sets on the x-axis give 1.
pub fn detect_k(points: &[PlanePoint]) -> Result<u64> {
    let anchors = [PlanePoint::origin(), PlanePoint::int(1, 0)];
    if !anchors.iter().all(|a| points.contains(a)) {
        return Err(Error::domain("detect_k needs a set containing (0,0) and (1,0)"));
    }
    let mut found: Option<(u64, usize)> = None;
    for (idx, p) in points.iter().enumerate() {
        if !p.x().is_rational() {
            return Err(Error::integrity(format!("point {idx} has irrational x = {}", p.x())));
        }
        let y = p.y();
        if y.is_zero() {
            continue;
        }
        let pk = if y.is_rational() {
            1
        } else if y.is_pure_surd() {
            y.k()
        } else {
            return Err(Error::integrity(format!(
                "point {idx} has y = {y}, not of the form r*sqrt(k)"
            )));
        };
        match found {
            None => found = Some((pk, idx)),
            Some((k, first)) if k != pk => {
                return Err(Error::integrity(format!(
                    "point {first} needs k = {k} but point {idx} needs k = {pk}"
                )))
            }
            Some(_) => {}
        }
    }
    Ok(found.map_or(1, |(k, _)| k))
}

/// Inversion in the circle of radius `radius` about `center`:
/// `p -> c + r^2 (p - c) / |p - c|^2`. The center itself must not be among
/// `points`.
pub fn invert_points(
    points: &[PlanePoint],
    center: &PlanePoint,
    radius: &Rational,
) -> Result<Vec<PlanePoint>> {
    if !radius.is_positive() {
        return Err(Error::domain("inversion radius must be positive"));
    }
    let r2 = QuadExt::rational(radius * radius);
    points
        .iter()
        .map(|p| {
            let d = dist2(p, center)?;
            let scale = r2.clone()
                * d.inv().ok_or_else(|| Error::domain("cannot invert the center itself"))?;
            let (dx, dy) = p.sub(center);
            PlanePoint::new(
                center.x().clone() + scale.clone() * dx,
                center.y().clone() + scale * dy,
            )
        })
        .collect()
}

/// Inverts `set` minus its `center`-th point about that point.
pub fn invert_set(
    set: &RationalDistanceSet,
    center: usize,
    radius: &Rational,
) -> Result<RationalDistanceSet> {
    set.require_verified("invert_set")?;
    let c = set
        .points
        .get(center)
        .ok_or_else(|| Error::domain(format!("center index {center} out of range")))?;
    let rest: Vec<PlanePoint> = set
        .points
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != center)
        .map(|(_, p)| p.clone())
        .collect();
    let image = invert_points(&rest, c, radius)?;
    if image.is_empty() {
        return Err(Error::domain("inverting a singleton leaves no points"));
    }
    RationalDistanceSet::new(image, set.k)?
        .verify()
        .map_err(|e| Error::integrity(format!("inverted set is not rational: {e}")))
}
