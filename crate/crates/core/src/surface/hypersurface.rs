use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::poly::MPoly;

/// Variable names `x1, ..., x_{n+1}, w` for points in `n`-space.
pub fn hypersurface_vars(n: usize) -> Vec<String> {
    (1..=n + 1).map(|i| format!("x{i}")).chain(std::iter::once("w".to_string())).collect()
}

/// `x_{n+1}^2 - prod_i sum_j (x_j - a_ij)^2`, homogenized with `w` to
/// degree `2m`.
pub fn hypersurface_nd(points: &[Vec<Rational>]) -> Result<MPoly<Rational>> {
    let Some(first) = points.first() else {
        return Err(Error::domain("a distance hypersurface needs at least one point"));
    };
    let n = first.len();
    if n < 2 {
        return Err(Error::domain("points must live in dimension n >= 2"));
    }
    if points.iter().any(|p| p.len() != n) {
        return Err(Error::domain("points have different dimensions"));
    }
    for i in 0..points.len() {
        if let Some(j) = (i + 1..points.len()).find(|&j| points[j] == points[i]) {
            return Err(Error::domain(format!("points {i} and {j} coincide")));
        }
    }
    let all = hypersurface_vars(n);
    let vars = &all[..n + 1];
    let x = |j: usize| MPoly::<Rational>::var(vars, &vars[j]).unwrap();
    let mut product = MPoly::constant(vars, Rational::from_integer(1.into()));
    for p in points {
        let mut sum = MPoly::zero(vars);
        for (j, a) in p.iter().enumerate() {
            let d = x(j) - MPoly::constant(vars, a.clone());
            sum = sum + d.clone() * d;
        }
        product = product * sum;
    }
    let f = x(n).pow(2) - product;
    f.homogenize("w", 2 * points.len() as u32)
}
