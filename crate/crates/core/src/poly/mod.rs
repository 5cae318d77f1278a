//! Exact polynomial arithmetic over any [`Field`](crate::arith::Field).
//!
//! [`MPoly`] and [`LaurentPoly`] share one sparse representation keyed by
//! exponent vectors in graded-lexicographic order with the declared
//! variables ordered `x < y < z < ...`. [`UniPoly`] is a dense univariate
//! form used for gcds, squarefreeness and resultants.

mod forms;
mod multivariate;
mod univariate;

pub use forms::{pullback_2form, Substitution, TwoForm};
pub use multivariate::{Exponent, LaurentPoly, MPoly, Monomial, Polynomial};
pub use univariate::{resultant, squarefree_check, UniPoly};

use crate::arith::{Field, QuadExt};
use crate::error::{Error, Result};
use crate::rds::PlanePoint;

/// Expands `prod_i ((x - a_i)^2 + (y - b_i)^2)` in variables `(x, y)`.
pub fn expand_product(points: &[PlanePoint]) -> Result<MPoly<QuadExt>> {
    crate::rds::common_k(points)?;
    let vars = ["x", "y"];
    let x = MPoly::<QuadExt>::var(&vars, "x")?;
    let y = MPoly::<QuadExt>::var(&vars, "y")?;
    let mut acc = MPoly::constant(&vars, QuadExt::one());
    for p in points {
        let dx = x.clone() - MPoly::constant(&vars, p.x().clone());
        let dy = y.clone() - MPoly::constant(&vars, p.y().clone());
        acc = acc * (dx.clone() * dx + dy.clone() * dy);
    }
    Ok(acc)
}

/// Formal partial derivative with respect to the named variable.
pub fn partial_derivative<F: Field, E: Exponent>(
    poly: &Polynomial<F, E>,
    var: &str,
) -> Result<Polynomial<F, E>> {
    let idx = poly
        .var_index(var)
        .ok_or_else(|| Error::domain(format!("unknown variable `{var}`")))?;
    Ok(poly.derivative(idx))
}
