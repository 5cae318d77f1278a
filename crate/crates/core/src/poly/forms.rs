use std::ops::Add;

use super::multivariate::LaurentPoly;
use crate::arith::Field;
use crate::error::{Error, Result};

/// A 2-form `c_yx dy^dx + c_yz dy^dz + c_zx dz^dx` on a three-variable
/// space. The three variables of the coefficient ring play the roles of
/// `(x, y, z)` in that order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoForm<F: Field> {
    pub dy_dx: LaurentPoly<F>,
    pub dy_dz: LaurentPoly<F>,
    pub dz_dx: LaurentPoly<F>,
}

impl<F: Field> TwoForm<F> {
    pub fn new(dy_dx: LaurentPoly<F>, dy_dz: LaurentPoly<F>, dz_dx: LaurentPoly<F>) -> Result<Self> {
        if dy_dx.vars() != dy_dz.vars() || dy_dx.vars() != dz_dx.vars() {
            return Err(Error::domain("2-form coefficients over different variables"));
        }
        if dy_dx.vars().len() != 3 {
            return Err(Error::domain("2-forms live on a three-variable space"));
        }
        Ok(TwoForm { dy_dx, dy_dz, dz_dx })
    }

    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        let z = LaurentPoly::zero(vars);
        TwoForm { dy_dx: z.clone(), dy_dz: z.clone(), dz_dx: z }
    }

    /// `f * dy^dx`.
    pub fn dy_dx_form(f: LaurentPoly<F>) -> Self {
        let z = LaurentPoly::zero(f.vars());
        TwoForm { dy_dx: f, dy_dz: z.clone(), dz_dx: z }
    }

    pub fn vars(&self) -> &[String] {
        self.dy_dx.vars()
    }

    pub fn components(&self) -> [&LaurentPoly<F>; 3] {
        [&self.dy_dx, &self.dy_dz, &self.dz_dx]
    }

    /// Multiplication by a function.
    pub fn times(&self, f: &LaurentPoly<F>) -> Self {
        TwoForm {
            dy_dx: f.clone() * self.dy_dx.clone(),
            dy_dz: f.clone() * self.dy_dz.clone(),
            dz_dx: f.clone() * self.dz_dx.clone(),
        }
    }

    /// Regular means every coefficient is an honest polynomial.
    pub fn is_regular(&self) -> bool {
        self.components().iter().all(|c| !c.has_negative_exponents())
    }

    /// Wedge product of two 1-forms given by their coefficients on
    /// `(dx, dy, dz)`.
    pub fn wedge(a: &[LaurentPoly<F>; 3], b: &[LaurentPoly<F>; 3]) -> Self {
        let m = |i: usize, j: usize| a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
        TwoForm { dy_dx: m(1, 0), dy_dz: m(1, 2), dz_dx: m(2, 0) }
    }
}

impl<F: Field> Add for TwoForm<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        TwoForm {
            dy_dx: self.dy_dx + rhs.dy_dx,
            dy_dz: self.dy_dz + rhs.dy_dz,
            dz_dx: self.dz_dx + rhs.dz_dx,
        }
    }
}

/// A change of variables `x = images[0], y = images[1], z = images[2]`
/// written in three new variables.
#[derive(Clone, Debug)]
pub struct Substitution<F: Field> {
    images: [LaurentPoly<F>; 3],
}

impl<F: Field> Substitution<F> {
    pub fn new(images: [LaurentPoly<F>; 3]) -> Result<Self> {
        let vars = images[0].vars();
        if vars.len() != 3 || images.iter().any(|p| p.vars() != vars) {
            return Err(Error::domain("substitution images need three shared variables"));
        }
        Ok(Substitution { images })
    }

    /// The blow-up chart `x = x'z', y = y'z', z = z'`.
    pub fn blowup() -> Self {
        let vars = ["x'", "y'", "z'"];
        let v = |n: &str| LaurentPoly::<F>::var(&vars, n).unwrap();
        Substitution {
            images: [v("x'") * v("z'"), v("y'") * v("z'"), v("z'")],
        }
    }

    /// `x = x', y = y', z = z'`.
    pub fn identity() -> Self {
        let vars = ["x'", "y'", "z'"];
        let v = |n: &str| LaurentPoly::<F>::var(&vars, n).unwrap();
        Substitution { images: [v("x'"), v("y'"), v("z'")] }
    }

    pub fn target_vars(&self) -> &[String] {
        self.images[0].vars()
    }

    pub fn apply(&self, f: &LaurentPoly<F>) -> Result<LaurentPoly<F>> {
        f.substitute(&self.images)
    }

    /// Pulls back a 2-form: substitutes into each coefficient and expands
    /// each basis element with `d(u) = sum du/dv' dv'`.
    pub fn pullback(&self, w: &TwoForm<F>) -> Result<TwoForm<F>> {
        let d: Vec<[LaurentPoly<F>; 3]> = self
            .images
            .iter()
            .map(|u| [u.derivative(0), u.derivative(1), u.derivative(2)])
            .collect();
        let (dx, dy, dz) = (&d[0], &d[1], &d[2]);
        let basis = [
            TwoForm::wedge(dy, dx),
            TwoForm::wedge(dy, dz),
            TwoForm::wedge(dz, dx),
        ];
        let mut out = TwoForm::zero(self.target_vars());
        for (coeff, b) in w.components().into_iter().zip(basis) {
            if coeff.is_zero() {
                continue;
            }
            out = out + b.times(&self.apply(coeff)?);
        }
        Ok(out)
    }
}

/// Pullback along the blow-up chart `x = x'z', y = y'z', z = z'`.
pub fn pullback_2form<F: Field>(w: &TwoForm<F>) -> Result<TwoForm<F>> {
    Substitution::<F>::blowup().pullback(w)
}
