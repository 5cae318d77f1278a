use rayon::prelude::*;

use super::{DistanceSurface, XYZ};
use crate::arith::{Field, GaussQuad};
use crate::error::{Error, Result};
use crate::poly::{resultant, MPoly, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SingularLocation {
    /// `(x, y, z)` in the factored model.
    Affine { x: GaussQuad, y: GaussQuad, z: GaussQuad },
    /// A point at infinity given in homogeneous `[x : y : z : w]`
    /// coordinates, with the affine chart used to study it.
    Infinity { point: [i8; 4], chart: &'static str },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LocalType {
    /// Quadratic part of full rank 3: locally `z^2 = xy`.
    Node,
    /// `z^a = x^b y^c` read off the dominant monomials of the chart.
    InfinityModel { z_exp: u32, x_exp: u32, y_exp: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPointRecord {
    pub location: SingularLocation,
    pub local_type: LocalType,
    /// `(i, j)` for the node at `(z_i, conj z_j, 0)`.
    pub roots: Option<(usize, usize)>,
}

/// The degree-2 part of a polynomial at a singular point, as a symmetric
/// matrix, and its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPart<F: Field> {
    pub matrix: Vec<Vec<F>>,
    pub rank: usize,
}

fn rank<F: Field>(mut m: Vec<Vec<F>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][c].inv().unwrap();
        for i in r + 1..rows {
            let f = m[i][c].clone() * inv.clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                m[i][j] = m[i][j].clone() - f.clone() * m[r][j].clone();
            }
        }
        r += 1;
    }
    r
}

/// Translates `point` to the origin and extracts the quadratic part of
/// `poly`. Fails if the point is not a singular point of `poly = 0`.
pub fn classify_singularity<F: Field>(poly: &MPoly<F>, point: &[F]) -> Result<QuadraticPart<F>> {
    let n = poly.vars().len();
    if point.len() != n {
        return Err(Error::domain("point has the wrong number of coordinates"));
    }
    let vars = poly.vars().to_vec();
    let images = (0..n)
        .map(|i| {
            Ok(MPoly::<F>::var(&vars, &vars[i])? + MPoly::constant(&vars, point[i].clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let local = poly.substitute(&images)?;
    if !local.homogeneous_part(0).is_zero() {
        return Err(Error::domain("point is not on the hypersurface"));
    }
    if !local.homogeneous_part(1).is_zero() {
        return Err(Error::domain("point is a smooth point of the hypersurface"));
    }
    let quad = local.homogeneous_part(2);
    let half = F::from_i64(2).inv().unwrap();
    let mut matrix = vec![vec![F::zero(); n]; n];
    for (mono, c) in quad.terms() {
        let idx: Vec<usize> = mono
            .exponents()
            .iter()
            .enumerate()
            .flat_map(|(i, &e)| std::iter::repeat(i).take(e as usize))
            .collect();
        match idx.as_slice() {
            [i, j] if i == j => matrix[*i][*i] = c.clone(),
            [i, j] => {
                matrix[*i][*j] = c.clone() * half.clone();
                matrix[*j][*i] = c.clone() * half.clone();
            }
            _ => unreachable!("homogeneous part of degree 2"),
        }
    }
    let rank = rank(matrix.clone());
    Ok(QuadraticPart { matrix, rank })
}

fn node_at(s: &DistanceSurface, model: &MPoly<GaussQuad>, i: usize, j: usize) -> Result<SingularPointRecord> {
    let x = s.roots[i].clone();
    let y = s.roots[j].conjugate();
    let point = [x.clone(), y.clone(), GaussQuad::zero()];
    for (name, f) in std::iter::once(("F", model.clone()))
        .chain((0..3).map(|v| (XYZ[v], model.derivative(v))))
    {
        if !f.eval(&point).is_zero() {
            return Err(Error::integrity(format!(
                "{name} does not vanish at (z_{i}, conj z_{j}, 0)"
            )));
        }
    }
    let quad = classify_singularity(model, &point)?;
    let local_type = if quad.rank == 3 {
        LocalType::Node
    } else {
        return Err(Error::integrity(format!(
            "quadratic part at (z_{i}, conj z_{j}, 0) has rank {}",
            quad.rank
        )));
    };
    Ok(SingularPointRecord {
        location: SingularLocation::Affine { x, y, z: GaussQuad::zero() },
        local_type,
        roots: Some((i, j)),
    })
}

/// The `m^2` singular points `(z_i, conj z_j, 0)` of `z^2 = P(x) Q(y)`,
/// each checked by exact vanishing of the equation and its three partials
/// and classified as a node.
pub fn singular_affine_points(s: &DistanceSurface) -> Result<Vec<SingularPointRecord>> {
    if !s.p.is_squarefree() || !s.q.is_squarefree() {
        return Err(Error::integrity("P or Q has a multiple root"));
    }
    let model = s.factored_model();
    let m = s.m();
    (0..m * m)
        .into_par_iter()
        .map(|n| node_at(s, &model, n / m, n % m))
        .collect()
}

/// Node classification of an affine record.
pub fn classify_node(s: &DistanceSurface, record: &SingularPointRecord) -> Result<LocalType> {
    let SingularLocation::Affine { x, y, z } = &record.location else {
        return Err(Error::domain("classify_node needs an affine record"));
    };
    let quad = classify_singularity(&s.factored_model(), &[x.clone(), y.clone(), z.clone()])?;
    if quad.rank == 3 {
        Ok(LocalType::Node)
    } else {
        Err(Error::integrity(format!(
            "quadratic part has rank {}, not an A1 node",
            quad.rank
        )))
    }
}

/// The singular point `[0 : 0 : 1 : 0]` of the projectivized factored
/// model, studied in the chart `z = 1`. The exponent of `w` is read from
/// the restriction to the `w`-axis and those of `x, y` from the restriction
/// to `w = 0`. `None` when `m = 1`, where the point is not on the surface.
pub fn infinity_singularity(s: &DistanceSurface) -> Result<Option<SingularPointRecord>> {
    if s.m() < 2 {
        return Ok(None);
    }
    let proj = s.factored_projective();
    let chart = proj.specialize(2, &GaussQuad::one())?;
    let origin = [GaussQuad::zero(), GaussQuad::zero(), GaussQuad::one(), GaussQuad::zero()];
    if !chart.eval(&origin).is_zero() {
        return Ok(None);
    }
    if (0..4).any(|v| !proj.derivative(v).eval(&origin).is_zero()) {
        return Err(Error::integrity("[0:0:1:0] is a smooth point"));
    }
    // w-axis: x = y = 0
    let axis = chart
        .specialize(0, &GaussQuad::zero())?
        .specialize(1, &GaussQuad::zero())?;
    let z_exp = axis
        .terms()
        .map(|(m, _)| m.exponents()[3])
        .min()
        .ok_or_else(|| Error::integrity("chart vanishes on the w-axis"))?;
    let plane = chart.specialize(3, &GaussQuad::zero())?;
    let (x_exp, y_exp) = match plane.terms().collect::<Vec<_>>().as_slice() {
        [(m, _)] => (m.exponents()[0], m.exponents()[1]),
        _ => return Err(Error::integrity("restriction to w = 0 is not a single monomial")),
    };
    Ok(Some(SingularPointRecord {
        location: SingularLocation::Infinity { point: [0, 0, 1, 0], chart: "z = 1" },
        local_type: LocalType::InfinityModel { z_exp, x_exp, y_exp },
        roots: None,
    }))
}

/// A line of the plane at infinity `w = 0` contained in the surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityComponent {
    pub equations: &'static str,
    /// The surface is singular at every point of the line.
    pub singular_along: bool,
}

/// The part of the projectivized factored model at infinity. For `m >= 2`
/// it is `x^m y^m = 0` inside `w = 0`, i.e. the two lines `x = w = 0` and
/// `y = w = 0`, and the gradient is tested for vanishing along each.
pub fn infinity_locus(s: &DistanceSurface) -> Result<Vec<InfinityComponent>> {
    let proj = s.factored_projective();
    let mut out = Vec::new();
    for (var, equations) in [(0usize, "x = 0, w = 0"), (1, "y = 0, w = 0")] {
        let on_line = |f: &MPoly<GaussQuad>| -> Result<MPoly<GaussQuad>> {
            f.specialize(var, &GaussQuad::zero())?.specialize(3, &GaussQuad::zero())
        };
        if !on_line(&proj)?.is_zero() {
            continue;
        }
        let singular_along = (0..4)
            .map(|v| on_line(&proj.derivative(v)).map(|p| p.is_zero()))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|z| z);
        out.push(InfinityComponent { equations, singular_along });
    }
    Ok(out)
}

/// Independent elimination of the affine singular locus of the factored
/// model, for small `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationReport {
    /// The single root of `dF/dz`.
    pub z_root: GaussQuad,
    /// Squarefree polynomial with every singular x-coordinate as a root.
    pub x_eliminant: UniPoly<GaussQuad>,
    pub y_eliminant: UniPoly<GaussQuad>,
    /// `deg x_eliminant * deg y_eliminant`, an upper bound on the number
    /// of singular points.
    pub candidate_count: usize,
    /// How many candidates were exhibited as distinct singular points.
    pub confirmed: usize,
    /// Every candidate is confirmed; the locus is known exactly.
    pub complete: bool,
}

/// Coefficients of `f` as a polynomial in variable `outer` over `K[inner]`.
fn split(f: &MPoly<GaussQuad>, outer: usize, inner: usize) -> Vec<UniPoly<GaussQuad>> {
    let deg = f.degree_in(outer).unwrap_or(0) as usize;
    let mut rows = vec![vec![GaussQuad::zero(); f.degree_in(inner).unwrap_or(0) as usize + 1]; deg + 1];
    for (m, c) in f.terms() {
        let e = m.exponents();
        rows[e[outer] as usize][e[inner] as usize] = c.clone();
    }
    rows.into_iter().map(UniPoly::new).collect()
}

fn radical(p: &UniPoly<GaussQuad>) -> Result<UniPoly<GaussQuad>> {
    Ok(p.exact_div(&p.gcd(&p.derivative()))?.monic())
}

/// Eliminates the system `F = F_x = F_y = F_z = 0` without using the
/// factorization: solve `F_z = 0` for `z`, then take resultants in `y` (resp.
/// `x`) of the remaining equations and their radicals. The singular points
/// lie in the product of the root sets of the two eliminants; the candidate
/// grid is compared against `m^2` exact solutions.
pub fn eliminate_affine_singularities(s: &DistanceSurface) -> Result<EliminationReport> {
    let model = s.factored_model();
    let fz = model.derivative(2);
    if fz.degree_in(0).unwrap_or(0) > 0 || fz.degree_in(1).unwrap_or(0) > 0 {
        return Err(Error::integrity("F_z depends on x or y"));
    }
    let fz = UniPoly::from_mpoly(&fz, 2)?;
    if fz.degree() != Some(1) {
        return Err(Error::integrity("F_z is not linear in z"));
    }
    let z_root = -(fz.coeffs()[0].clone() * fz.coeffs()[1].inv().unwrap());
    let at_root = |f: MPoly<GaussQuad>| f.specialize(2, &z_root);
    let h = at_root(model.clone())?;
    let hx = at_root(model.derivative(0))?;
    let hy = at_root(model.derivative(1))?;

    let eliminant = |outer: usize, inner: usize, d: &MPoly<GaussQuad>, other: &MPoly<GaussQuad>| {
        let r1 = resultant(&split(&h, outer, inner), &split(d, outer, inner))?;
        let r2 = resultant(&split(other, outer, inner), &split(d, outer, inner))?;
        let g = r1.gcd(&r2);
        if g.is_zero() {
            return Err(Error::integrity("eliminant vanishes identically"));
        }
        radical(&g)
    };
    let x_eliminant = eliminant(1, 0, &hy, &hx)?;
    let y_eliminant = eliminant(0, 1, &hx, &hy)?;
    let candidate_count = x_eliminant.degree().unwrap_or(0) * y_eliminant.degree().unwrap_or(0);

    let mut confirmed = std::collections::HashSet::new();
    for rec in singular_affine_points(s)? {
        if let SingularLocation::Affine { x, y, z } = &rec.location {
            let ok = x_eliminant.eval(x).is_zero() && y_eliminant.eval(y).is_zero() && *z == z_root;
            if ok {
                confirmed.insert((x.clone(), y.clone()));
            }
        }
    }
    let confirmed = confirmed.len();
    Ok(EliminationReport {
        z_root,
        x_eliminant,
        y_eliminant,
        candidate_count,
        confirmed,
        complete: confirmed == candidate_count,
    })
}
