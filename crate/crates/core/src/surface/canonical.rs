use rayon::prelude::*;

use super::certificate::Rejection;
use super::{DistanceSurface, XYZ};
use crate::arith::{Field, GaussQuad, Rational};
use crate::error::{Error, Result};
use crate::poly::{pullback_2form, LaurentPoly, Substitution, TwoForm};

/// Divisor bookkeeping for the double cover `X -> P^1 x P^1` branched
/// along `(P(x)) + (Q(y))`. Classes on the quadric are bidegrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationReport {
    pub m: usize,
    pub g: usize,
    pub deg_p: usize,
    pub deg_q: usize,
    /// `(P(x)) + (Q(y))`: `2g+2` fibers from each ruling.
    pub branch_bidegree: (i64, i64),
    /// `R` with `2R = (z^2) = (P(x)) + (Q(y))`.
    pub ramification_class: (i64, i64),
    pub base_canonical: (i64, i64),
    /// `K_X = pi^*(K + R)`.
    pub canonical_pullback_class: (i64, i64),
    /// Both entries of the pulled-back class are positive.
    pub ample: bool,
}

/// Exact integer bookkeeping from the degrees of `P` and `Q`.
pub fn ramification_bookkeeping(s: &DistanceSurface) -> std::result::Result<RamificationReport, Rejection> {
    let m = s.m();
    if m % 2 == 1 {
        return Err(Rejection::MOdd { m });
    }
    if m < 6 {
        return Err(Rejection::GenusTooSmall { g: (m as i64 - 2) / 2 });
    }
    let g = (m - 2) / 2;
    let deg_p = s.p().degree().unwrap_or(0);
    let deg_q = s.q().degree().unwrap_or(0);
    if deg_p != m || deg_q != m {
        return Err(Rejection::Bookkeeping(format!("deg P = {deg_p}, deg Q = {deg_q}, m = {m}")));
    }
    let branch = (deg_p as i64, deg_q as i64);
    if branch.0 % 2 != 0 || branch.1 % 2 != 0 {
        return Err(Rejection::Bookkeeping("branch divisor is not divisible by 2".into()));
    }
    let ram = (branch.0 / 2, branch.1 / 2);
    let base = (-2, -2);
    let canonical = (base.0 + ram.0, base.1 + ram.1);
    if canonical != (g as i64 - 1, g as i64 - 1) {
        return Err(Rejection::Bookkeeping(format!("canonical class {canonical:?}")));
    }
    Ok(RamificationReport {
        m,
        g,
        deg_p,
        deg_q,
        branch_bidegree: branch,
        ramification_class: ram,
        base_canonical: base,
        canonical_pullback_class: canonical,
        ample: canonical.0 > 0 && canonical.1 > 0,
    })
}

/// `omega_{k,l} = y^k x^l (dy^dx)/z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm<F: Field> {
    pub k: i32,
    pub l: i32,
    pub form: TwoForm<F>,
}

fn omega_kl<F: Field>(k: i32, l: i32) -> Result<TwoForm<F>> {
    let v = |n: &str| LaurentPoly::<F>::var(&XYZ, n);
    let coeff = v("y")?.signed_pow(k as i64)? * v("x")?.signed_pow(l as i64)? * v("z")?.signed_pow(-1)?;
    Ok(TwoForm::dy_dx_form(coeff))
}

/// The `g^2` forms with `0 <= k, l <= g-1`, ordered by `k` then `l`.
pub fn canonical_forms<F: Field>(g: usize) -> Result<Vec<CanonicalForm<F>>> {
    if g < 1 {
        return Err(Error::domain("canonical forms need g >= 1"));
    }
    let mut out = Vec::with_capacity(g * g);
    for k in 0..g as i32 {
        for l in 0..g as i32 {
            out.push(CanonicalForm { k, l, form: omega_kl(k, l)? });
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormCheck {
    pub k: i32,
    pub l: i32,
    pub pullback: TwoForm<Rational>,
    pub regular: bool,
}

/// Pulls `omega_{k,l}` back along the blow-up chart. Any integers are
/// accepted, so out-of-range forms can be tested too.
pub fn check_form(k: i32, l: i32) -> Result<FormCheck> {
    let pullback = pullback_2form(&omega_kl::<Rational>(k, l)?)?;
    let regular = pullback.is_regular();
    Ok(FormCheck { k, l, pullback, regular })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PullbackReport {
    /// `omega` pulls back to `z' dy'^dx' + x' dy'^dz' + y' dz'^dx'`.
    pub omega_identity: bool,
    pub forms: Vec<FormCheck>,
    pub all_regular: bool,
}

fn omega_prime<F: Field>() -> TwoForm<F> {
    let t = ["x'", "y'", "z'"];
    let v = |n: &str| LaurentPoly::<F>::var(&t, n).unwrap();
    TwoForm { dy_dx: v("z'"), dy_dz: v("x'"), dz_dx: v("y'") }
}

pub fn blowup_pullback_check(g: usize) -> Result<PullbackReport> {
    if g < 1 {
        return Err(Error::domain("pullback check needs g >= 1"));
    }
    let omega_identity = pullback_2form(&omega_kl::<Rational>(0, 0)?)? == omega_prime();
    let forms = (0..g * g)
        .into_par_iter()
        .map(|n| check_form((n / g) as i32, (n % g) as i32))
        .collect::<Result<Vec<_>>>()?;
    let all_regular = forms.iter().all(|f| f.regular);
    Ok(PullbackReport { omega_identity, forms, all_regular })
}

/// Pulls every `omega_{k,l}` back along the blow-up centered at each node
/// `(z_i, conj z_j, 0)`: `x = z_i + x'z'`, `y = conj z_j + y'z'`, `z = z'`.
/// Returns the first `(k, l, i, j)` that fails, or `None`.
pub fn node_pullback_check(s: &DistanceSurface, g: usize) -> Result<Option<(i32, i32, usize, usize)>> {
    let forms = canonical_forms::<GaussQuad>(g)?;
    let t = ["x'", "y'", "z'"];
    let v = |n: &str| LaurentPoly::<GaussQuad>::var(&t, n).unwrap();
    let c = |a: &GaussQuad| LaurentPoly::<GaussQuad>::constant(&t, a.clone());
    let m = s.m();
    let bad = (0..m * m)
        .into_par_iter()
        .map(|n| -> Result<Option<(i32, i32, usize, usize)>> {
            let (i, j) = (n / m, n % m);
            let sub = Substitution::new([
                c(&s.roots()[i]) + v("x'") * v("z'"),
                c(&s.roots()[j].conjugate()) + v("y'") * v("z'"),
                v("z'"),
            ])?;
            for f in &forms {
                if !sub.pullback(&f.form)?.is_regular() {
                    return Ok(Some((f.k, f.l, i, j)));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(bad.into_iter().flatten().next())
}
