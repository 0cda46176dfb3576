//! Finite polylogarithms `£_d(x) = sum_{k=1}^{p-1} x^k / k^d` and the polynomial
//! `Q_p(x) = (x^p + (1-x)^p - 1) / p`.

use num_bigint::BigInt;

use crate::rings::{DensePoly, InverseTable, Ring};

/// `£_d(x)` with `p` the length of the inverse table, by Horner's rule.
pub fn finite_polylog<R: Ring>(d: u32, x: &R, inv: &InverseTable<R>) -> R {
    let ctx = x.ctx();
    let mut acc = R::zero(&ctx);
    for k in (1..inv.len()).rev() {
        acc = acc.add(&inv.pow(k, d)).mul(x);
    }
    acc
}

/// `£_d` as a polynomial of degree `p - 1` (formal degree `p - 1`).
pub fn polylog_poly<R: Ring>(d: u32, inv: &InverseTable<R>, ctx: &R::Ctx) -> DensePoly<R> {
    let mut coeffs = Vec::with_capacity(inv.len());
    coeffs.push(R::zero(ctx));
    for k in 1..inv.len() {
        coeffs.push(inv.pow(k, d));
    }
    DensePoly::new(ctx.clone(), coeffs)
}

/// `Q_p(x)` from exact binomials; the `x^p` terms cancel for odd `p`.
pub fn qp_poly<R: Ring>(p: u64, ctx: &R::Ctx) -> DensePoly<R> {
    let n = p as usize;
    let mut coeffs = vec![R::zero(ctx); n];
    let mut binom = BigInt::from(1);
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        binom = binom * (p - k as u64 + 1) / k;
        let c = &binom / p;
        let c = if k % 2 == 1 { -c } else { c };
        *slot = R::from_bigint(ctx, &c);
    }
    DensePoly::new(ctx.clone(), coeffs)
}
