//! Dense univariate polynomials over a [`Ring`], carrying a formal degree.

use std::fmt;

use thiserror::Error;

use super::Ring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("degree {degree} exceeds formal degree {formal}")]
    DegreeExceedsFormal { degree: usize, formal: usize },
    #[error("coefficient division by {0} is not defined in this ring")]
    NotInvertible(i64),
}

/// Substitutions handled by [`DensePoly::compose_affine`].
#[derive(Clone, Debug)]
pub enum AffineMap<R> {
    /// `x -> 1 - x`
    OneMinus,
    /// `x -> c x`
    Scale(R),
    /// `x -> x + c`
    Translate(R),
}

#[derive(Clone)]
pub struct DensePoly<R: Ring> {
    ctx: R::Ctx,
    coeffs: Vec<R>,
    formal: usize,
}

impl<R: Ring> DensePoly<R> {
    pub fn new(ctx: R::Ctx, coeffs: Vec<R>) -> Self {
        let formal = coeffs.len().saturating_sub(1);
        DensePoly { ctx, coeffs, formal }
    }

    pub fn from_i64s(ctx: R::Ctx, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| R::from_i64(&ctx, c)).collect();
        Self::new(ctx, cs)
    }

    pub fn zero(ctx: R::Ctx) -> Self {
        DensePoly { ctx, coeffs: Vec::new(), formal: 0 }
    }

    pub fn constant(c: R) -> Self {
        DensePoly { ctx: c.ctx(), coeffs: vec![c], formal: 0 }
    }

    /// `c x^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let ctx = c.ctx();
        let mut coeffs = vec![R::zero(&ctx); k];
        coeffs.push(c);
        DensePoly { ctx, coeffs, formal: k }
    }

    pub fn x(ctx: R::Ctx) -> Self {
        let one = R::one(&ctx);
        Self::monomial(one, 1)
    }

    /// Sets the formal degree; it may not drop below the actual degree.
    pub fn with_formal_degree(mut self, m: usize) -> Result<Self, PolyError> {
        if let Some(d) = self.degree() {
            if d > m {
                return Err(PolyError::DegreeExceedsFormal { degree: d, formal: m });
            }
        }
        self.formal = m;
        Ok(self)
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn formal_degree(&self) -> usize {
        self.formal
    }

    /// Actual degree ignoring zero coefficients; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(|| R::zero(&self.ctx))
    }

    pub fn set_coeff(&mut self, i: usize, c: R) {
        if i >= self.coeffs.len() {
            self.coeffs.resize(i + 1, R::zero(&self.ctx));
        }
        self.coeffs[i] = c;
        self.formal = self.formal.max(i);
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn trimmed(mut self) -> Self {
        let n = self.degree().map_or(0, |d| d + 1);
        self.coeffs.truncate(n);
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        DensePoly { ctx: self.ctx.clone(), coeffs, formal: self.formal.max(other.formal) }
    }

    pub fn neg(&self) -> Self {
        DensePoly {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(R::neg).collect(),
            formal: self.formal,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let formal = self.formal + other.formal;
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return DensePoly { ctx: self.ctx.clone(), coeffs: Vec::new(), formal };
        }
        let mut coeffs = vec![R::zero(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        DensePoly { ctx: self.ctx.clone(), coeffs, formal }
    }

    pub fn scale(&self, c: &R) -> Self {
        DensePoly {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
            formal: self.formal,
        }
    }

    pub fn scale_i64(&self, n: i64) -> Self {
        self.scale(&R::from_i64(&self.ctx, n))
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![R::zero(&self.ctx); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DensePoly { ctx: self.ctx.clone(), coeffs, formal: self.formal + k }
    }

    /// Reduction modulo `x^n`.
    pub fn truncate(&self, n: usize) -> Self {
        let coeffs: Vec<R> = self.coeffs.iter().take(n).cloned().collect();
        let formal = self.formal.min(n.saturating_sub(1));
        DensePoly { ctx: self.ctx.clone(), coeffs, formal }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(R::one(&self.ctx));
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// `f(g(x))` by Horner's rule; formal degrees multiply.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero(self.ctx.clone());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(c.clone()));
        }
        let degree = acc.degree().unwrap_or(0);
        acc.formal = (self.formal * g.formal).max(degree);
        acc
    }

    pub fn compose_affine(&self, map: &AffineMap<R>) -> Self {
        let one = R::one(&self.ctx);
        let zero = R::zero(&self.ctx);
        let g = match map {
            AffineMap::OneMinus => DensePoly::new(self.ctx.clone(), vec![one.clone(), one.neg()]),
            AffineMap::Scale(c) => DensePoly::new(self.ctx.clone(), vec![zero, c.clone()]),
            AffineMap::Translate(c) => DensePoly::new(self.ctx.clone(), vec![c.clone(), one]),
        };
        let mut out = self.compose(&g);
        out.coeffs.resize(out.coeffs.len().max(self.formal + 1), R::zero(&self.ctx));
        out.formal = self.formal;
        out
    }

    /// `x^m f(1/x)`.
    pub fn reverse(&self, m: usize) -> Result<Self, PolyError> {
        if let Some(d) = self.degree() {
            if d > m {
                return Err(PolyError::DegreeExceedsFormal { degree: d, formal: m });
            }
        }
        let coeffs = (0..=m).map(|i| self.coeff(m - i)).collect();
        Ok(DensePoly { ctx: self.ctx.clone(), coeffs, formal: m })
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&R::from_i64(&self.ctx, i as i64)))
            .collect();
        DensePoly { ctx: self.ctx.clone(), coeffs, formal: self.formal.saturating_sub(1) }
    }

    /// Antiderivative with zero constant term.
    pub fn integrate(&self) -> Result<Self, PolyError> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(R::zero(&self.ctx));
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = i as i64 + 1;
            let inv = R::from_frac(&self.ctx, 1, k).ok_or(PolyError::NotInvertible(k))?;
            coeffs.push(c.mul(&inv));
        }
        Ok(DensePoly { ctx: self.ctx.clone(), coeffs, formal: self.formal + 1 })
    }

    /// Applies `f` to every coefficient, moving to another ring.
    pub fn map<S: Ring>(&self, ctx: S::Ctx, f: impl Fn(&R) -> S) -> DensePoly<S> {
        DensePoly { ctx, coeffs: self.coeffs.iter().map(f).collect(), formal: self.formal }
    }

    /// First index at which `self` and `other` differ, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, R, R)> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).find_map(|i| {
            let (a, b) = (self.coeff(i), other.coeff(i));
            (!a.sub(&b).is_zero()).then_some((i, a, b))
        })
    }
}

impl<R: Ring> PartialEq for DensePoly<R> {
    /// Value equality: trailing zeros and formal degree are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }
}

impl<R: Ring> fmt::Debug for DensePoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c:?}"),
                1 => format!("({c:?})x"),
                _ => format!("({c:?})x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")?;
        } else {
            write!(f, "{}", terms.join(" + "))?;
        }
        write!(f, " [m={}]", self.formal)
    }
}

impl<R: Ring> Ring for DensePoly<R> {
    type Ctx = R::Ctx;

    fn ctx(&self) -> R::Ctx {
        self.ctx.clone()
    }

    fn zero(ctx: &R::Ctx) -> Self {
        DensePoly::zero(ctx.clone())
    }

    fn from_i64(ctx: &R::Ctx, n: i64) -> Self {
        DensePoly::constant(R::from_i64(ctx, n))
    }

    fn from_bigint(ctx: &R::Ctx, n: &num_bigint::BigInt) -> Self {
        DensePoly::constant(R::from_bigint(ctx, n))
    }

    fn from_frac(ctx: &R::Ctx, num: i64, den: i64) -> Option<Self> {
        R::from_frac(ctx, num, den).map(DensePoly::constant)
    }

    fn add(&self, other: &Self) -> Self {
        DensePoly::add(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        DensePoly::sub(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        DensePoly::mul(self, other)
    }

    fn neg(&self) -> Self {
        DensePoly::neg(self)
    }

    fn is_zero(&self) -> bool {
        DensePoly::is_zero(self)
    }
}
