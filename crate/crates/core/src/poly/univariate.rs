use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::multivariate::{MPoly, Polynomial};
use crate::arith::Field;
use crate::error::{Error, Result};

/// Dense univariate polynomial, coefficients from degree 0 upward, never
/// with a trailing zero.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`.
    pub fn linear_root(root: F) -> Self {
        Self::new(vec![-root, F::one()])
    }

    /// `prod (x - r)` over `roots`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a F>) -> Self
    where
        F: 'a,
    {
        roots
            .into_iter()
            .fold(Self::constant(F::one()), |acc, r| acc * Self::linear_root(r.clone()))
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead_inv = divisor
            .leading()
            .ok_or_else(|| Error::domain("division by the zero polynomial"))?
            .inv()
            .expect("leading coefficient is nonzero");
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![F::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * d.clone();
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Quotient of an exact division; an integrity error if a remainder is left.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::integrity("inexact polynomial division"));
        }
        Ok(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Converts a polynomial whose only variable with nonzero exponent is
    /// `idx`.
    pub fn from_mpoly(p: &MPoly<F>, idx: usize) -> Result<Self> {
        let mut coeffs = vec![F::zero(); p.degree_in(idx).unwrap_or(0) as usize + 1];
        for (m, c) in p.terms() {
            let e = m.exponents();
            if e.iter().enumerate().any(|(i, &x)| i != idx && x != 0) {
                return Err(Error::domain("polynomial is not univariate"));
            }
            coeffs[e[idx] as usize] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    /// Embeds as a polynomial in `vars[idx]`.
    pub fn to_mpoly<S: AsRef<str>>(&self, vars: &[S], idx: usize) -> MPoly<F> {
        Polynomial::from_terms(
            vars,
            self.coeffs.iter().enumerate().map(|(i, c)| {
                let mut e = vec![0u32; vars.len()];
                e[idx] = i as u32;
                (e, c.clone())
            }),
        )
    }
}

/// True iff `gcd(p, p')` is a nonzero constant. `p` must be univariate
/// (exactly one variable may carry exponents) and nonzero.
pub fn squarefree_check<F: Field>(p: &MPoly<F>) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::domain("squarefreeness of the zero polynomial"));
    }
    let active: Vec<usize> = (0..p.vars().len())
        .filter(|&i| p.degree_in(i).unwrap_or(0) > 0)
        .collect();
    let idx = match active.as_slice() {
        [] => return Ok(true),
        [i] => *i,
        _ => return Err(Error::domain("squarefree_check needs a univariate polynomial")),
    };
    let u = UniPoly::from_mpoly(p, idx)?;
    Ok(u.is_squarefree())
}

impl<F: Field> UniPoly<F> {
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

/// Resultant of `f` and `g` read as polynomials in an outer variable with
/// coefficients in `K[t]` (`f[i]` is the coefficient of the outer variable
/// to the `i`-th power). Computed as the Sylvester determinant by
/// fraction-free (Bareiss) elimination over `K[t]`.
pub fn resultant<F: Field>(f: &[UniPoly<F>], g: &[UniPoly<F>]) -> Result<UniPoly<F>> {
    let trim = |p: &[UniPoly<F>]| {
        let mut v = p.to_vec();
        while v.last().is_some_and(UniPoly::is_zero) {
            v.pop();
        }
        v
    };
    let (f, g) = (trim(f), trim(g));
    if f.is_empty() || g.is_empty() {
        return Ok(UniPoly::zero());
    }
    let (df, dg) = (f.len() - 1, g.len() - 1);
    let n = df + dg;
    if n == 0 {
        return Ok(UniPoly::constant(F::one()));
    }
    // rows: dg shifted copies of f, then df shifted copies of g; columns by
    // descending power of the outer variable
    let mut m = vec![vec![UniPoly::<F>::zero(); n]; n];
    for r in 0..dg {
        for (i, c) in f.iter().enumerate() {
            m[r][r + df - i] = c.clone();
        }
    }
    for r in 0..df {
        for (i, c) in g.iter().enumerate() {
            m[dg + r][r + dg - i] = c.clone();
        }
    }
    bareiss_det(m)
}

fn bareiss_det<F: Field>(mut m: Vec<Vec<UniPoly<F>>>) -> Result<UniPoly<F>> {
    let n = m.len();
    let mut sign = false;
    let mut prev = UniPoly::constant(F::one());
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return Ok(UniPoly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num.exact_div(&prev)?;
            }
            m[i][k] = UniPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign { -det } else { det })
}

impl<F: Field> Add for UniPoly<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(F::zero);
            out.push(a + b);
        }
        Self::new(out)
    }
}

impl<F: Field> Neg for UniPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        UniPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<F: Field> Sub for UniPoly<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: Field> Mul for UniPoly<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<F: Field> fmt::Debug for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_mpoly(&["t"], 0), f)
    }
}
