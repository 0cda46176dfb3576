//! Coefficient domains, dense polynomials, quadratic extensions and truncated series.

pub mod poly;
pub mod quad;
pub mod series;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use num_traits::{One, Zero};

use crate::arith::{inv_mod, PadicApprox, PadicContext, Residue};

pub use poly::{AffineMap, DensePoly};
pub use quad::{QuadElem, QuadExt};
pub use series::{log1p_series, series_mul, series_pow_log, series_pow_log_by_products};

/// A commutative ring with a runtime context (modulus, p-adic precision, extension data).
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    type Ctx: Clone + PartialEq + Debug + Send + Sync;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self;
    fn from_bigint(ctx: &Self::Ctx, n: &BigInt) -> Self;
    /// `num / den`, or `None` when `den` is not invertible.
    fn from_frac(ctx: &Self::Ctx, num: i64, den: i64) -> Option<Self>;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn one(ctx: &Self::Ctx) -> Self {
        Self::from_i64(ctx, 1)
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::one(&self.ctx());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn scale_i64(&self, n: i64) -> Self {
        self.mul(&Self::from_i64(&self.ctx(), n))
    }
}

impl Ring for Residue {
    type Ctx = u64;

    fn ctx(&self) -> u64 {
        self.modulus()
    }

    fn zero(m: &u64) -> Self {
        Residue::from_u64(0, *m)
    }

    fn from_i64(m: &u64, n: i64) -> Self {
        Residue::new(n as i128, *m)
    }

    fn from_bigint(m: &u64, n: &BigInt) -> Self {
        let r = n.mod_floor(&BigInt::from(*m)).to_u64().expect("below modulus");
        Residue::from_u64(r, *m)
    }

    fn from_frac(m: &u64, num: i64, den: i64) -> Option<Self> {
        if *m == 1 {
            return Some(Residue::from_u64(0, 1));
        }
        let inv = inv_mod(den as i128, *m).ok()?;
        Some(Residue::new(num as i128, *m) * Residue::from_u64(inv, *m))
    }

    fn add(&self, other: &Self) -> Self {
        *self + *other
    }

    fn sub(&self, other: &Self) -> Self {
        *self - *other
    }

    fn mul(&self, other: &Self) -> Self {
        *self * *other
    }

    fn neg(&self) -> Self {
        -*self
    }

    fn is_zero(&self) -> bool {
        self.value() == 0
    }
}

impl Ring for PadicApprox {
    type Ctx = PadicContext;

    fn ctx(&self) -> PadicContext {
        PadicApprox::ctx(self)
    }

    fn zero(ctx: &PadicContext) -> Self {
        PadicApprox::zero(*ctx)
    }

    fn one(ctx: &PadicContext) -> Self {
        PadicApprox::one(*ctx)
    }

    fn from_i64(ctx: &PadicContext, n: i64) -> Self {
        PadicApprox::from_i64(*ctx, n)
    }

    fn from_bigint(ctx: &PadicContext, n: &BigInt) -> Self {
        PadicApprox::from_bigint(*ctx, n)
    }

    fn from_frac(ctx: &PadicContext, num: i64, den: i64) -> Option<Self> {
        PadicApprox::from_ratio(*ctx, num as i128, den as i128).ok()
    }

    fn add(&self, other: &Self) -> Self {
        PadicApprox::add(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        PadicApprox::sub(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        PadicApprox::mul(self, other)
    }

    fn neg(&self) -> Self {
        PadicApprox::neg(self)
    }

    fn is_zero(&self) -> bool {
        PadicApprox::is_zero(self)
    }
}

impl Ring for BigRational {
    type Ctx = ();

    fn ctx(&self) {}

    fn zero(_: &()) -> Self {
        Zero::zero()
    }

    fn one(_: &()) -> Self {
        One::one()
    }

    fn from_i64(_: &(), n: i64) -> Self {
        BigRational::from_integer(n.into())
    }

    fn from_bigint(_: &(), n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }

    fn from_frac(_: &(), num: i64, den: i64) -> Option<Self> {
        (den != 0).then(|| BigRational::new(num.into(), den.into()))
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// `1/k` for `k = 0..n` (slot 0 unused), computed once and shared across orders.
#[derive(Clone, Debug)]
pub struct InverseTable<R: Ring> {
    inv: Vec<R>,
}

impl<R: Ring> InverseTable<R> {
    /// Panics if some `k < n` is not invertible in the ring.
    pub fn new(ctx: &R::Ctx, n: u64) -> Self {
        let mut inv = Vec::with_capacity(n as usize);
        inv.push(R::zero(ctx));
        for k in 1..n {
            inv.push(R::from_frac(ctx, 1, k as i64).expect("k must be a unit"));
        }
        InverseTable { inv }
    }

    pub fn get(&self, k: usize) -> &R {
        &self.inv[k]
    }

    /// `k^(-d)`.
    pub fn pow(&self, k: usize, d: u32) -> R {
        self.inv[k].pow(d as u64)
    }

    pub fn len(&self) -> usize {
        self.inv.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inv.len() <= 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residue_fractions() {
        assert_eq!(Residue::from_frac(&7, 1, 6).unwrap().value(), 6);
        assert!(Residue::from_frac(&25, 1, 5).is_none());
    }

    #[test]
    fn generic_pow_matches_padic_pow() {
        let ctx = PadicContext::new(7, 3, 2).unwrap();
        let x = PadicApprox::from_ratio(ctx, 10, 3).unwrap();
        assert_eq!(Ring::pow(&x, 9), PadicApprox::pow(&x, 9).unwrap());
    }

    #[test]
    fn inverse_table() {
        let t: InverseTable<Residue> = InverseTable::new(&25, 5);
        for k in 1..5 {
            assert_eq!((*t.get(k) * Residue::from_u64(k as u64, 25)).value(), 1);
        }
    }
}
