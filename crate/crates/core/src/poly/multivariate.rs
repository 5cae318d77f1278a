use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::Field;
use crate::error::{Error, Result};

/// Exponent type of a sparse polynomial: `u32` for ordinary polynomials,
/// `i32` for Laurent polynomials.
pub trait Exponent: Copy + Ord + Eq + Hash + fmt::Debug + Send + Sync + 'static {
    fn to_i64(self) -> i64;
    fn from_i64(v: i64) -> Option<Self>;
}

impl Exponent for u32 {
    fn to_i64(self) -> i64 {
        self as i64
    }
    fn from_i64(v: i64) -> Option<Self> {
        u32::try_from(v).ok()
    }
}

impl Exponent for i32 {
    fn to_i64(self) -> i64 {
        self as i64
    }
    fn from_i64(v: i64) -> Option<Self> {
        i32::try_from(v).ok()
    }
}

/// Exponent vector, ordered graded-lexicographically with the last
/// variable most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial<E>(Vec<E>);

impl<E: Exponent> Monomial<E> {
    pub fn new(exps: Vec<E>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[E] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|e| e.to_i64()).sum()
    }

    fn one(n: usize) -> Self {
        Monomial(vec![E::from_i64(0).unwrap(); n])
    }

    fn mul(&self, other: &Self) -> Self {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| E::from_i64(a.to_i64() + b.to_i64()).expect("exponent overflow"))
                .collect(),
        )
    }
}

impl<E: Exponent> Ord for Monomial<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl<E: Exponent> PartialOrd for Monomial<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over a fixed, named variable list. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F, E> {
    vars: Vec<String>,
    terms: BTreeMap<Monomial<E>, F>,
}

pub type MPoly<F> = Polynomial<F, u32>;
pub type LaurentPoly<F> = Polynomial<F, i32>;

impl<F: Field, E: Exponent> Polynomial<F, E> {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        Polynomial {
            vars: vars.iter().map(|s| s.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: F) -> Self {
        let mut p = Self::zero(vars);
        let n = p.vars.len();
        p.insert(Monomial::one(n), c);
        p
    }

    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        let idx = p
            .var_index(name)
            .ok_or_else(|| Error::domain(format!("unknown variable `{name}`")))?;
        let mut exps = vec![E::from_i64(0).unwrap(); vars.len()];
        exps[idx] = E::from_i64(1).unwrap();
        p.insert(Monomial(exps), F::one());
        Ok(p)
    }

    /// `coeff * prod vars[i]^exps[i]`.
    pub fn monomial<S: AsRef<str>>(vars: &[S], exps: &[E], coeff: F) -> Self {
        assert_eq!(vars.len(), exps.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.insert(Monomial(exps.to_vec()), coeff);
        p
    }

    pub fn from_terms<S: AsRef<str>>(
        vars: &[S],
        terms: impl IntoIterator<Item = (Vec<E>, F)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), p.vars.len(), "exponent vector length");
            p.add_term(Monomial(exps), c);
        }
        p
    }

    fn insert(&mut self, m: Monomial<E>, c: F) {
        if !c.is_zero() {
            self.terms.insert(m, c);
        }
    }

    fn add_term(&mut self, m: Monomial<E>, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial<E>, &F)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[E]) -> F {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(F::zero)
    }

    /// The value when the polynomial is constant.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.0.iter().all(|e| e.to_i64() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest exponent of variable `idx`; `None` for zero.
    pub fn degree_in(&self, idx: usize) -> Option<i64> {
        self.terms.keys().map(|m| m.0[idx].to_i64()).max()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|e| e.to_i64()))
            .min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: i64) -> Self {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, v) in &self.terms {
            out.insert(m.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::constant(&self.vars, F::one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Exact formal derivative in variable `idx`.
    pub fn derivative(&self, idx: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[idx].to_i64();
            if e == 0 {
                continue;
            }
            let mut exps = m.0.clone();
            exps[idx] = E::from_i64(e - 1).expect("exponent underflow");
            out.add_term(Monomial(exps), c.clone() * F::from_i64(e));
        }
        out
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G, E> {
        let mut out = Polynomial::<G, E>::zero(&self.vars);
        for (m, c) in &self.terms {
            out.insert(m.clone(), f(c));
        }
        out
    }

    /// Same terms under new variable names (positional).
    pub fn rename<S: AsRef<str>>(&self, vars: &[S]) -> Self {
        assert_eq!(vars.len(), self.vars.len(), "rename arity");
        Polynomial {
            vars: vars.iter().map(|s| s.as_ref().to_string()).collect(),
            terms: self.terms.clone(),
        }
    }

    /// Evaluates at `values` (one per variable). Negative exponents need a
    /// nonzero base; `None` otherwise.
    pub fn try_eval(&self, values: &[F]) -> Option<F> {
        assert_eq!(values.len(), self.vars.len(), "evaluation arity");
        let mut cache: HashMap<(usize, i64), F> = HashMap::new();
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.0.iter().enumerate() {
                let e = e.to_i64();
                if e == 0 {
                    continue;
                }
                let p = match cache.get(&(i, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let base = if e < 0 { values[i].inv()? } else { values[i].clone() };
                        let p = base.pow(e.unsigned_abs() as u32);
                        cache.insert((i, e), p.clone());
                        p
                    }
                };
                t = t * p;
            }
            acc = acc + t;
        }
        Some(acc)
    }

    /// Substitutes `images[i]` for variable `i`. All images share one
    /// variable list, which becomes the result's. A negative exponent is
    /// allowed only when the corresponding image is a single term, so that
    /// it is invertible in the Laurent ring.
    pub fn substitute<E2: Exponent>(&self, images: &[Polynomial<F, E2>]) -> Result<Polynomial<F, E2>> {
        if images.len() != self.vars.len() {
            return Err(Error::domain("substitution arity mismatch"));
        }
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_default();
        if images.iter().any(|p| p.vars != target) {
            return Err(Error::domain("substitution images use different variables"));
        }
        let mut powers: HashMap<(usize, i64), Polynomial<F, E2>> = HashMap::new();
        let mut out = Polynomial::<F, E2>::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::<F, E2>::constant(&target, c.clone());
            for (i, e) in m.0.iter().enumerate() {
                let e = e.to_i64();
                if e == 0 {
                    continue;
                }
                let p = match powers.get(&(i, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = images[i].signed_pow(e)?;
                        powers.insert((i, e), p.clone());
                        p
                    }
                };
                t = t * p;
            }
            out = out + t;
        }
        Ok(out)
    }

    /// `self^e` for any integer `e`; negative powers only for single terms.
    pub fn signed_pow(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            return Ok(self.pow(e as u32));
        }
        if self.terms.len() != 1 {
            return Err(Error::domain("negative power of a non-monomial"));
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let inv_exps = m
            .0
            .iter()
            .map(|x| E::from_i64(-x.to_i64()))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::domain("negative exponent in a polynomial ring"))?;
        let inv = Self::monomial(&self.vars, &inv_exps, c.inv().expect("nonzero coefficient"));
        Ok(inv.pow(e.unsigned_abs() as u32))
    }

    /// Restricts variable `idx` to the constant `value` (a partial
    /// evaluation).
    pub fn specialize(&self, idx: usize, value: &F) -> Result<Self> {
        let mut images = Vec::with_capacity(self.vars.len());
        for i in 0..self.vars.len() {
            if i == idx {
                images.push(Self::constant(&self.vars, value.clone()));
            } else {
                images.push(Self::var(&self.vars, &self.vars[i].clone())?);
            }
        }
        self.substitute(&images)
    }

    /// Re-expresses the polynomial over a larger variable list that contains
    /// every current variable by name.
    pub fn embed<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self> {
        let images = self
            .vars
            .iter()
            .map(|v| Self::var(vars, v))
            .collect::<Result<Vec<_>>>()?;
        if images.is_empty() {
            return Ok(Self::constant(vars, self.as_constant().unwrap_or_else(F::zero)));
        }
        self.substitute(&images)
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomials over different variables");
    }
}

impl<F: Field> MPoly<F> {
    pub fn eval(&self, values: &[F]) -> F {
        self.try_eval(values).expect("polynomial evaluation is total")
    }

    /// Homogenizes to degree `degree` with the new last variable `var`.
    pub fn homogenize(&self, var: &str, degree: u32) -> Result<MPoly<F>> {
        let top = self.total_degree().unwrap_or(0);
        if top > degree as i64 {
            return Err(Error::domain("homogenization degree below total degree"));
        }
        let mut vars = self.vars.clone();
        vars.push(var.to_string());
        let mut out = MPoly::<F>::zero(&vars);
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            exps.push(degree - m.degree() as u32);
            out.insert(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    pub fn to_laurent(&self) -> LaurentPoly<F> {
        let mut out = LaurentPoly::<F>::zero(&self.vars);
        for (m, c) in &self.terms {
            out.insert(Monomial(m.0.iter().map(|&e| e as i32).collect()), c.clone());
        }
        out
    }
}

impl<F: Field> LaurentPoly<F> {
    pub fn has_negative_exponents(&self) -> bool {
        self.min_exponent().is_some_and(|e| e < 0)
    }

    /// The ordinary polynomial, if no exponent is negative.
    pub fn to_mpoly(&self) -> Option<MPoly<F>> {
        let mut out = MPoly::<F>::zero(&self.vars);
        for (m, c) in &self.terms {
            let exps = m
                .0
                .iter()
                .map(|&e| u32::try_from(e).ok())
                .collect::<Option<Vec<_>>>()?;
            out.insert(Monomial(exps), c.clone());
        }
        Some(out)
    }
}

impl<F: Field, E: Exponent> Add for Polynomial<F, E> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.check_vars(&rhs);
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<F: Field, E: Exponent> Sub for Polynomial<F, E> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self.check_vars(&rhs);
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<F: Field, E: Exponent> Neg for Polynomial<F, E> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial {
            vars: self.vars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<F: Field, E: Exponent> Mul for Polynomial<F, E> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check_vars(&rhs);
        let mut out = Self::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<F: Field, E: Exponent> fmt::Debug for Polynomial<F, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Canonical rendering: terms in descending graded-lex order, exact
/// coefficients, irrational coefficients parenthesized.
impl<F: Field, E: Exponent> fmt::Display for Polynomial<F, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = m
                .0
                .iter()
                .zip(&self.vars)
                .filter(|(e, _)| e.to_i64() != 0)
                .map(|(e, v)| match e.to_i64() {
                    1 => v.clone(),
                    e => format!("{v}^{e}"),
                })
                .collect();
            let mono = mono.join("*");
            let (negative, coeff) = match c.as_rational() {
                Some(q) if q < num_traits::Zero::zero() => (true, (-q).to_string()),
                Some(q) => (false, q.to_string()),
                None => (false, format!("({c})")),
            };
            let body = match (coeff.as_str(), mono.is_empty()) {
                (_, true) => coeff,
                ("1", false) => mono,
                (_, false) => format!("{coeff}*{mono}"),
            };
            match (n, negative) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}
