use std::fmt;

use serde::{Deserialize, Serialize};

use super::canonical::{blowup_pullback_check, node_pullback_check, ramification_bookkeeping};
use super::singular::{infinity_singularity, singular_affine_points, LocalType};
use super::{build_surface, DistanceSurface};
use crate::error::{Error, Result};
use crate::rds::{collinear, PlanePoint};

/// Why a point set does not meet the hypotheses of the general-type
/// criterion, or which check failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    MOdd { m: usize },
    GenusTooSmall { g: i64 },
    Collinear,
    NotSquarefree,
    NodeCount { found: usize, expected: usize },
    InfinityModel(String),
    Bookkeeping(String),
    IrregularPullback { k: i32, l: i32 },
    IrregularNodePullback { k: i32, l: i32, node: (usize, usize) },
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::MOdd { .. } => write!(f, "m odd"),
            Rejection::GenusTooSmall { .. } => write!(f, "g < 2"),
            Rejection::Collinear => write!(f, "collinear"),
            Rejection::NotSquarefree => write!(f, "not squarefree"),
            Rejection::NodeCount { .. } => write!(f, "node count"),
            Rejection::InfinityModel(_) => write!(f, "infinity model"),
            Rejection::Bookkeeping(_) => write!(f, "bookkeeping"),
            Rejection::IrregularPullback { .. } => write!(f, "irregular pullback"),
            Rejection::IrregularNodePullback { .. } => write!(f, "irregular node pullback"),
        }
    }
}

impl Rejection {
    /// Longer human-readable explanation.
    pub fn detail(&self) -> String {
        match self {
            Rejection::MOdd { m } => format!("m = {m} is odd"),
            Rejection::GenusTooSmall { g } => format!("m = 2g+2 gives g = {g}"),
            Rejection::Collinear => "all points lie on one line".into(),
            Rejection::NotSquarefree => "P or Q has a repeated root".into(),
            Rejection::NodeCount { found, expected } => {
                format!("found {found} nodes, expected {expected}")
            }
            Rejection::InfinityModel(s) | Rejection::Bookkeeping(s) => s.clone(),
            Rejection::IrregularPullback { k, l } => {
                format!("omega_{{{k},{l}}} does not pull back to a regular form")
            }
            Rejection::IrregularNodePullback { k, l, node: (i, j) } => {
                format!("omega_{{{k},{l}}} is irregular on the blow-up at node ({i}, {j})")
            }
        }
    }
}

/// Every checked fact behind a general-type verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralTypeCertificate {
    pub m: usize,
    pub g: usize,
    pub k: u64,
    pub non_collinear: bool,
    pub squarefree_p: bool,
    pub squarefree_q: bool,
    pub node_count: usize,
    pub canonical_form_count: usize,
    pub branch_bidegree: (i64, i64),
    pub canonical_pullback_class: (i64, i64),
    pub pullback_regular: bool,
    pub node_pullback_regular: bool,
    pub infinity_exponents: (u32, u32, u32),
    pub projective_degree: i64,
    pub ample: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateOutcome {
    Issued(GeneralTypeCertificate),
    Rejected(Rejection),
}

impl CertificateOutcome {
    pub fn is_issued(&self) -> bool {
        matches!(self, CertificateOutcome::Issued(_))
    }
}

fn all_collinear(points: &[PlanePoint]) -> bool {
    let Some(a) = points.first() else { return true };
    let Some(b) = points.iter().find(|p| *p != a) else { return true };
    points.iter().all(|c| collinear(a, b, c))
}

/// Runs the whole pipeline. Malformed input (empty, duplicate points, mixed
/// `k`) is an error; a failed hypothesis or check is a rejection.
pub fn general_type_certificate(points: &[PlanePoint]) -> Result<CertificateOutcome> {
    let s = build_surface(points)?;
    use CertificateOutcome::Rejected;
    let m = s.m();
    if m % 2 == 1 {
        return Ok(Rejected(Rejection::MOdd { m }));
    }
    if m < 6 {
        return Ok(Rejected(Rejection::GenusTooSmall { g: (m as i64 - 2) / 2 }));
    }
    let g = (m - 2) / 2;
    if all_collinear(points) {
        return Ok(Rejected(Rejection::Collinear));
    }
    let squarefree_p = s.p().is_squarefree();
    let squarefree_q = s.q().is_squarefree();
    if !squarefree_p || !squarefree_q {
        return Ok(Rejected(Rejection::NotSquarefree));
    }
    let nodes = singular_affine_points(&s)?;
    if nodes.len() != m * m || nodes.iter().any(|r| r.local_type != LocalType::Node) {
        return Ok(Rejected(Rejection::NodeCount { found: nodes.len(), expected: m * m }));
    }
    let infinity_exponents = match infinity_exponents(&s)? {
        Ok(e) => e,
        Err(r) => return Ok(Rejected(r)),
    };
    let book = match ramification_bookkeeping(&s) {
        Ok(b) => b,
        Err(r) => return Ok(Rejected(r)),
    };
    let pullbacks = blowup_pullback_check(g)?;
    if !pullbacks.omega_identity {
        return Ok(Rejected(Rejection::Bookkeeping("omega pullback identity fails".into())));
    }
    if let Some(f) = pullbacks.forms.iter().find(|f| !f.regular) {
        return Ok(Rejected(Rejection::IrregularPullback { k: f.k, l: f.l }));
    }
    if let Some((k, l, i, j)) = node_pullback_check(&s, g)? {
        return Ok(Rejected(Rejection::IrregularNodePullback { k, l, node: (i, j) }));
    }
    Ok(CertificateOutcome::Issued(GeneralTypeCertificate {
        m,
        g,
        k: s.k(),
        non_collinear: true,
        squarefree_p,
        squarefree_q,
        node_count: nodes.len(),
        canonical_form_count: pullbacks.forms.len(),
        branch_bidegree: book.branch_bidegree,
        canonical_pullback_class: book.canonical_pullback_class,
        pullback_regular: pullbacks.all_regular,
        node_pullback_regular: true,
        infinity_exponents,
        projective_degree: s.projective_degree(),
        ample: book.ample,
    }))
}

fn infinity_exponents(s: &DistanceSurface) -> Result<std::result::Result<(u32, u32, u32), Rejection>> {
    let m = s.m() as u32;
    let expected = (2 * m - 2, m, m);
    Ok(match infinity_singularity(s)? {
        Some(rec) => match rec.local_type {
            LocalType::InfinityModel { z_exp, x_exp, y_exp } if (z_exp, x_exp, y_exp) == expected => {
                Ok(expected)
            }
            other => Err(Rejection::InfinityModel(format!("found {other:?}"))),
        },
        None => Err(Rejection::InfinityModel("no singular point at infinity".into())),
    })
}

impl GeneralTypeCertificate {
    /// Recomputes the certificate for `points` and compares field by field.
    pub fn recheck(&self, points: &[PlanePoint]) -> Result<()> {
        match general_type_certificate(points)? {
            CertificateOutcome::Issued(fresh) if fresh == *self => Ok(()),
            CertificateOutcome::Issued(_) => {
                Err(Error::integrity("stored certificate differs from the recomputed one"))
            }
            CertificateOutcome::Rejected(r) => Err(Error::integrity(format!(
                "stored certificate, but the points are rejected: {r}"
            ))),
        }
    }
}
