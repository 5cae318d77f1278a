//! Distance surfaces `z^2 = prod ((x - a_i)^2 + (y - b_i)^2)` and the data
//! certifying that they are of general type.
//!
//! Over `Q(sqrt k)(i)` the change of coordinates `x + iy -> x`,
//! `x - iy -> y` turns the surface into `z^2 = P(x) Q(y)` with
//! `P = prod (x - z_j)`, `Q = prod (y - conj z_j)` and `z_j = a_j + i b_j`.
//! Most checks here run on that factored model.

mod canonical;
mod certificate;
mod hypersurface;
mod singular;

pub use canonical::{
    blowup_pullback_check, canonical_forms, check_form, node_pullback_check,
    ramification_bookkeeping, CanonicalForm, FormCheck, PullbackReport, RamificationReport,
};
pub use certificate::{general_type_certificate, CertificateOutcome, GeneralTypeCertificate, Rejection};
pub use hypersurface::{hypersurface_nd, hypersurface_vars};
pub use singular::{
    classify_node, classify_singularity, eliminate_affine_singularities, infinity_locus,
    infinity_singularity, singular_affine_points, EliminationReport, InfinityComponent, LocalType,
    QuadraticPart, SingularLocation, SingularPointRecord,
};

use crate::arith::{rational_square_root, Field, GaussQuad, QuadExt};
use crate::error::{Error, Result};
use crate::poly::{expand_product, MPoly, UniPoly};
use crate::rds::{common_k, dist2, PlanePoint};

pub(crate) const XYZ: [&str; 3] = ["x", "y", "z"];

/// The distance surface of a finite point set.
#[derive(Clone, Debug)]
pub struct DistanceSurface {
    points: Vec<PlanePoint>,
    k: u64,
    affine: MPoly<QuadExt>,
    projective: MPoly<QuadExt>,
    roots: Vec<GaussQuad>,
    p: UniPoly<GaussQuad>,
    q: UniPoly<GaussQuad>,
}

/// Builds `F = z^2 - prod ((x - a_i)^2 + (y - b_i)^2)`, its degree-`2m`
/// homogenization `z^2 w^(2m-2) - ...` and the factored data.
pub fn build_surface(points: &[PlanePoint]) -> Result<DistanceSurface> {
    if points.is_empty() {
        return Err(Error::domain("a distance surface needs at least one point"));
    }
    let k = common_k(points)?;
    for i in 0..points.len() {
        if let Some(j) = (i + 1..points.len()).find(|&j| points[j] == points[i]) {
            return Err(Error::domain(format!(
                "points {i} and {j} coincide; P and Q would have multiple roots"
            )));
        }
    }
    let m = points.len() as u32;
    let z = MPoly::<QuadExt>::var(&XYZ, "z")?;
    let affine = z.clone() * z - expand_product(points)?.embed(&XYZ)?;
    let projective = affine.homogenize("w", 2 * m)?;
    let roots: Vec<GaussQuad> = points
        .iter()
        .map(|p| GaussQuad::new(p.x().clone(), p.y().clone()))
        .collect();
    let p = UniPoly::from_roots(&roots);
    let conj: Vec<GaussQuad> = roots.iter().map(GaussQuad::conjugate).collect();
    let q = UniPoly::from_roots(&conj);
    Ok(DistanceSurface { points: points.to_vec(), k, affine, projective, roots, p, q })
}

impl DistanceSurface {
    pub fn m(&self) -> usize {
        self.points.len()
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn points(&self) -> &[PlanePoint] {
        &self.points
    }

    /// `F` in `(x, y, z)`.
    pub fn affine(&self) -> &MPoly<QuadExt> {
        &self.affine
    }

    /// `F` homogenized in `(x, y, z, w)`.
    pub fn projective(&self) -> &MPoly<QuadExt> {
        &self.projective
    }

    pub fn projective_degree(&self) -> i64 {
        self.projective.total_degree().unwrap_or(0)
    }

    /// `z_j = a_j + i b_j`.
    pub fn roots(&self) -> &[GaussQuad] {
        &self.roots
    }

    pub fn p(&self) -> &UniPoly<GaussQuad> {
        &self.p
    }

    pub fn q(&self) -> &UniPoly<GaussQuad> {
        &self.q
    }

    /// `z^2 - P(x) Q(y)` in `(x, y, z)`.
    pub fn factored_model(&self) -> MPoly<GaussQuad> {
        let z = MPoly::<GaussQuad>::var(&XYZ, "z").unwrap();
        z.clone() * z - self.p.to_mpoly(&XYZ, 0) * self.q.to_mpoly(&XYZ, 1)
    }

    /// `z^2 w^(2m-2) - P^h(x, w) Q^h(y, w)` in `(x, y, z, w)`.
    pub fn factored_projective(&self) -> MPoly<GaussQuad> {
        self.factored_model()
            .homogenize("w", 2 * self.m() as u32)
            .expect("degree 2m bounds the model")
    }

    /// Checks `P(x + iy) Q(x - iy) = prod ((x - a_j)^2 + (y - b_j)^2)`.
    pub fn coordinate_change_holds(&self) -> Result<bool> {
        let xy = ["x", "y"];
        let x = MPoly::<GaussQuad>::var(&xy, "x")?;
        let y = MPoly::<GaussQuad>::var(&xy, "y")?;
        let i = MPoly::constant(&xy, GaussQuad::i());
        let images = [x.clone() + i.clone() * y.clone(), x - i * y];
        let pq = self.p.to_mpoly(&xy, 0) * self.q.to_mpoly(&xy, 1);
        let substituted = pq.substitute(&images)?;
        let expected = expand_product(&self.points)?.map_coeffs(|c| GaussQuad::real(c.clone()));
        Ok(substituted == expected)
    }

    /// `z0 = prod |p - a_i|` if every distance is rational, together with
    /// the check `F(x0, y0, z0) = 0`.
    pub fn lift_point(&self, p: &PlanePoint) -> Result<Option<(QuadExt, bool)>> {
        let mut z0 = QuadExt::one();
        for a in &self.points {
            let d = dist2(p, a)?;
            match d.as_rational().and_then(|q| rational_square_root(&q)) {
                Some(r) => z0 = z0 * QuadExt::rational(r),
                None => return Ok(None),
            }
        }
        let value = self.affine.eval(&[p.x().clone(), p.y().clone(), z0.clone()]);
        Ok(Some((z0, value.is_zero())))
    }
}

/// `P(x) = prod (x - z_j)` and `Q(y) = prod (y - conj z_j)`.
pub fn factored_form(s: &DistanceSurface) -> (UniPoly<GaussQuad>, UniPoly<GaussQuad>) {
    (s.p.clone(), s.q.clone())
}
