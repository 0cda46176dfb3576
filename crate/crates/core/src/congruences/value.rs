use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::cache;
use super::CongruenceError;
use crate::arith::{fermat_quotient, ArithError, PadicApprox, PadicContext, Residue};
use crate::rings::{DensePoly, QuadElem, Ring};
use crate::special::{lucas_quotient, SpecialConstants};

/// One side of a comparison.
#[derive(Clone, Debug)]
pub enum Value {
    /// Polynomial with coefficients in `Z/p^e`, `e >= j`.
    Poly(DensePoly<Residue>),
    Padic(PadicApprox),
    PadicPoly(DensePoly<PadicApprox>),
    Quad(QuadElem<PadicApprox>),
}

impl From<DensePoly<Residue>> for Value {
    fn from(f: DensePoly<Residue>) -> Self {
        Value::Poly(f)
    }
}

impl From<PadicApprox> for Value {
    fn from(x: PadicApprox) -> Self {
        Value::Padic(x)
    }
}

impl From<DensePoly<PadicApprox>> for Value {
    fn from(f: DensePoly<PadicApprox>) -> Self {
        Value::PadicPoly(f)
    }
}

impl From<QuadElem<PadicApprox>> for Value {
    fn from(x: QuadElem<PadicApprox>) -> Self {
        Value::Quad(x)
    }
}

/// Where and how a comparison failed. `index` is a coefficient index for
/// polynomial kinds and 0/1 (rational part, α-part) for quadratic values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub index: usize,
    /// `(LHS - RHS) mod p^j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<u64>,
    /// Set when the difference has negative valuation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub valuation: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Witness {
    pub(crate) fn error(msg: String) -> Self {
        Witness { label: String::new(), index: 0, residue: None, valuation: None, error: Some(msg) }
    }
}

#[derive(Clone, Debug)]
pub struct Comparison {
    pub label: String,
    pub j: u32,
    pub lhs: Value,
    pub rhs: Value,
}

impl Comparison {
    pub fn new(label: impl Into<String>, j: u32, lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        Comparison { label: label.into(), j, lhs: lhs.into(), rhs: rhs.into() }
    }

    /// `None` when `LHS ≡ RHS (mod p^j)`, else the first offending position.
    pub fn check(&self, p: u64) -> Result<Option<Witness>, CongruenceError> {
        match (&self.lhs, &self.rhs) {
            (Value::Poly(a), Value::Poly(b)) => {
                let m = p.pow(self.j);
                let n = a.len().max(b.len());
                for i in 0..n {
                    let r = a.coeff(i).sub(&b.coeff(i)).value() % m;
                    if r != 0 {
                        return Ok(Some(self.witness(i, Some(r), None)));
                    }
                }
                Ok(None)
            }
            (Value::Padic(a), Value::Padic(b)) => self.check_padic(0, &a.sub(b)),
            (Value::PadicPoly(a), Value::PadicPoly(b)) => {
                let n = a.len().max(b.len());
                for i in 0..n {
                    if let Some(w) = self.check_padic(i, &a.coeff(i).sub(&b.coeff(i)))? {
                        return Ok(Some(w));
                    }
                }
                Ok(None)
            }
            (Value::Quad(a), Value::Quad(b)) => {
                let d = a.sub(b);
                if let Some(w) = self.check_padic(0, d.a())? {
                    return Ok(Some(w));
                }
                self.check_padic(1, d.b())
            }
            _ => panic!("comparison {} mixes value kinds", self.label),
        }
    }

    /// The same comparison with `p^(j-1)` added to the constant term of the
    /// right-hand side, so that it fails exactly at the top digit.
    pub fn perturbed(&self, p: u64) -> Comparison {
        let bump = p.pow(self.j - 1);
        let rhs = match &self.rhs {
            Value::Poly(f) => {
                let mut g = f.clone();
                let c = g.coeff(0);
                g.set_coeff(0, c + Residue::from_u64(bump, c.modulus()));
                Value::Poly(g)
            }
            Value::Padic(x) => Value::Padic(x.add(&PadicApprox::from_i64(x.ctx(), bump as i64))),
            Value::PadicPoly(f) => {
                let mut g = f.clone();
                let c = g.coeff(0);
                g.set_coeff(0, c.add(&PadicApprox::from_i64(*f.ctx(), bump as i64)));
                Value::PadicPoly(g)
            }
            Value::Quad(x) => {
                let ctx = x.a().ctx();
                Value::Quad(x.add(&x.ext().embed(PadicApprox::from_i64(ctx, bump as i64))))
            }
        };
        Comparison { label: self.label.clone(), j: self.j, lhs: self.lhs.clone(), rhs }
    }

    fn check_padic(&self, index: usize, d: &PadicApprox) -> Result<Option<Witness>, CongruenceError> {
        match d.reduce(self.j) {
            Ok(0) => Ok(None),
            Ok(r) => Ok(Some(self.witness(index, Some(r), None))),
            Err(ArithError::NegativeValuation(v)) => Ok(Some(self.witness(index, None, Some(v)))),
            Err(e) => Err(e.into()),
        }
    }

    fn witness(&self, index: usize, residue: Option<u64>, valuation: Option<i32>) -> Witness {
        Witness { label: self.label.clone(), index, residue, valuation, error: None }
    }
}

/// Per-evaluation context: the prime, a `p`-adic context with `k = j` and the
/// case's guard, and shared per-prime constants.
pub struct Env {
    pub p: u64,
    pub j: u32,
    pub ctx: PadicContext,
}

impl Env {
    pub(crate) fn new(p: u64, j: u32, guard: u32) -> Result<Self, CongruenceError> {
        Ok(Env { p, j, ctx: PadicContext::new(p, j, guard)? })
    }

    pub fn int(&self, n: i64) -> PadicApprox {
        PadicApprox::from_i64(self.ctx, n)
    }

    pub fn frac(&self, num: i64, den: i64) -> PadicApprox {
        PadicApprox::from_ratio(self.ctx, num as i128, den as i128).expect("nonzero denominator")
    }

    /// `p^e` (negative `e` allowed).
    pub fn p_pow(&self, e: i32) -> PadicApprox {
        PadicApprox::one(self.ctx).shift(e)
    }

    pub fn constants(&self) -> Result<Arc<SpecialConstants>, CongruenceError> {
        cache::constants(self.p)
    }

    fn mod_p(&self, r: u64) -> PadicApprox {
        PadicApprox::from_residue(self.ctx, Residue::from_u64(r, self.p))
    }

    /// `B_m mod p`, known to absolute precision 1.
    pub fn bernoulli(&self, m: u64) -> Result<PadicApprox, CongruenceError> {
        Ok(self.mod_p(self.constants()?.bernoulli(m)?))
    }

    /// `E_n mod p`, known to absolute precision 1.
    pub fn euler(&self, n: u64) -> Result<PadicApprox, CongruenceError> {
        Ok(self.mod_p(self.constants()?.euler(n)?))
    }

    /// `B_n(num/den) mod p`, known to absolute precision 1.
    pub fn bernoulli_poly(&self, n: u64, num: i64, den: i64) -> Result<PadicApprox, CongruenceError> {
        Ok(self.mod_p(self.constants()?.bernoulli_poly(n, num, den)?))
    }

    pub fn fermat_quotient(&self, a: i64) -> Result<PadicApprox, CongruenceError> {
        Ok(fermat_quotient(a, self.ctx)?)
    }

    pub fn lucas_quotient(&self) -> PadicApprox {
        lucas_quotient(self.ctx)
    }

    /// `(p/3)`, which equals `(-3/p)`.
    pub fn leg3(&self) -> i64 {
        if self.p % 3 == 1 {
            1
        } else {
            -1
        }
    }

    /// `(p/5)`.
    pub fn leg5(&self) -> i64 {
        if matches!(self.p % 5, 1 | 4) {
            1
        } else {
            -1
        }
    }

    /// `(-1/p)`.
    pub fn leg_minus1(&self) -> i64 {
        if self.p % 4 == 1 {
            1
        } else {
            -1
        }
    }

    /// `C(2k, k)` for `k = 0..=n`.
    pub fn central_binomials(&self, n: usize) -> Vec<PadicApprox> {
        let mut out = Vec::with_capacity(n + 1);
        let mut c = self.int(1);
        out.push(c);
        for k in 1..=n as i64 {
            c = c.mul(&self.int(2 * (2 * k - 1))).div(&self.int(k)).expect("k is nonzero");
            out.push(c);
        }
        out
    }
}
