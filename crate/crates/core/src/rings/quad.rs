//! Quadratic extensions `R[α]/(α² - Pα + Q)` over a base ring.

use std::fmt;

use super::Ring;

#[derive(Clone, PartialEq)]
pub struct QuadExt<R: Ring> {
    p: R,
    q: R,
}

impl<R: Ring> QuadExt<R> {
    /// `α² = Pα − Q`.
    pub fn new(p: R, q: R) -> Self {
        QuadExt { p, q }
    }

    /// `i` with `i² = −1`.
    pub fn gaussian(ctx: &R::Ctx) -> Self {
        Self::new(R::zero(ctx), R::one(ctx))
    }

    /// Primitive sixth root of unity, `ω² = ω − 1`.
    pub fn omega6(ctx: &R::Ctx) -> Self {
        Self::new(R::one(ctx), R::one(ctx))
    }

    /// Golden ratio, `φ² = φ + 1`.
    pub fn golden(ctx: &R::Ctx) -> Self {
        Self::new(R::one(ctx), R::from_i64(ctx, -1))
    }

    pub fn trace_coeff(&self) -> &R {
        &self.p
    }

    pub fn norm_coeff(&self) -> &R {
        &self.q
    }

    pub fn base_ctx(&self) -> R::Ctx {
        self.p.ctx()
    }

    pub fn elem(&self, a: R, b: R) -> QuadElem<R> {
        QuadElem { a, b, ext: self.clone() }
    }

    pub fn embed(&self, a: R) -> QuadElem<R> {
        let zero = R::zero(&a.ctx());
        self.elem(a, zero)
    }

    pub fn alpha(&self) -> QuadElem<R> {
        let ctx = self.base_ctx();
        self.elem(R::zero(&ctx), R::one(&ctx))
    }

    /// `2α − P`, a square root of the discriminant `P² − 4Q`.
    pub fn sqrt_disc(&self) -> QuadElem<R> {
        let ctx = self.base_ctx();
        self.elem(self.p.neg(), R::from_i64(&ctx, 2))
    }
}

impl<R: Ring> fmt::Debug for QuadExt<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α² = ({:?})α − ({:?})", self.p, self.q)
    }
}

/// `a + bα`.
#[derive(Clone, PartialEq)]
pub struct QuadElem<R: Ring> {
    a: R,
    b: R,
    ext: QuadExt<R>,
}

impl<R: Ring> QuadElem<R> {
    pub fn a(&self) -> &R {
        &self.a
    }

    pub fn b(&self) -> &R {
        &self.b
    }

    pub fn ext(&self) -> &QuadExt<R> {
        &self.ext
    }

    /// `(a + bP) − bα`.
    pub fn conj(&self) -> Self {
        let a = self.a.add(&self.b.mul(&self.ext.p));
        self.ext.elem(a, self.b.neg())
    }

    /// `x · conj(x)`, which lies in the base ring.
    pub fn norm(&self) -> R {
        let n = self.mul(&self.conj());
        debug_assert!(n.b.is_zero());
        n.a
    }

    pub fn scale(&self, c: &R) -> Self {
        self.ext.elem(self.a.mul(c), self.b.mul(c))
    }
}

impl<R: Ring> fmt::Debug for QuadElem<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + ({:?})α", self.a, self.b)
    }
}

impl<R: Ring> Ring for QuadElem<R> {
    type Ctx = QuadExt<R>;

    fn ctx(&self) -> QuadExt<R> {
        self.ext.clone()
    }

    fn zero(ext: &QuadExt<R>) -> Self {
        ext.embed(R::zero(&ext.base_ctx()))
    }

    fn from_i64(ext: &QuadExt<R>, n: i64) -> Self {
        ext.embed(R::from_i64(&ext.base_ctx(), n))
    }

    fn from_bigint(ext: &QuadExt<R>, n: &num_bigint::BigInt) -> Self {
        ext.embed(R::from_bigint(&ext.base_ctx(), n))
    }

    fn from_frac(ext: &QuadExt<R>, num: i64, den: i64) -> Option<Self> {
        R::from_frac(&ext.base_ctx(), num, den).map(|c| ext.embed(c))
    }

    fn add(&self, other: &Self) -> Self {
        self.ext.elem(self.a.add(&other.a), self.b.add(&other.b))
    }

    fn sub(&self, other: &Self) -> Self {
        self.ext.elem(self.a.sub(&other.a), self.b.sub(&other.b))
    }

    /// `(a+bα)(c+dα) = (ac − bdQ) + (ad + bc + bdP)α`.
    fn mul(&self, other: &Self) -> Self {
        let bd = self.b.mul(&other.b);
        let a = self.a.mul(&other.a).sub(&bd.mul(&self.ext.q));
        let b = self.a.mul(&other.b).add(&self.b.mul(&other.a)).add(&bd.mul(&self.ext.p));
        self.ext.elem(a, b)
    }

    fn neg(&self) -> Self {
        self.ext.elem(self.a.neg(), self.b.neg())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Residue;
    use num_rational::BigRational;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn defining_relations() {
        let g = QuadExt::<BigRational>::gaussian(&());
        let i = g.alpha();
        assert_eq!(i.mul(&i), g.embed(int(-1)));

        let f = QuadExt::<BigRational>::golden(&());
        let phi = f.alpha();
        assert_eq!(phi.mul(&phi), f.elem(int(1), int(1)));
        assert_eq!(Ring::pow(&phi, 7), f.elem(int(8), int(13)));

        let w = QuadExt::<BigRational>::omega6(&());
        let omega = w.alpha();
        assert_eq!(omega.norm(), int(1));
        assert_eq!(Ring::pow(&omega, 6), w.embed(int(1)));
        assert_eq!(Ring::pow(&omega, 0), w.embed(int(1)));
    }

    #[test]
    fn radicals() {
        let f = QuadExt::<Residue>::golden(&121);
        let s5 = f.sqrt_disc();
        assert_eq!(s5.mul(&s5), f.embed(Residue::new(5, 121)));
        let w = QuadExt::<Residue>::omega6(&49);
        let s3 = w.sqrt_disc();
        assert_eq!(s3.mul(&s3), w.embed(Residue::new(-3, 49)));
    }

    #[test]
    fn conjugation() {
        let e = QuadExt::<BigRational>::new(int(3), int(-7));
        let x = e.elem(int(2), int(5));
        let y = e.elem(int(-1), int(4));
        assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
        assert_eq!(x.conj().conj(), x);
    }
}
