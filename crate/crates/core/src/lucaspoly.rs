//! Lucas sequences `u_n(x, y)`, `v_n(x, y)` by the additive recurrence
//! `w_n = x w_{n-1} - y w_{n-2}`, with `u_0 = 0, u_1 = 1, v_0 = 2, v_1 = x`.

use num_rational::BigRational;

use crate::rings::{DensePoly, InverseTable, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LucasKind {
    U,
    V,
}

/// `w_0, ..., w_n`.
pub fn lucas_seq<R: Ring>(kind: LucasKind, n: usize, x: &R, y: &R) -> Vec<R> {
    let ctx = x.ctx();
    let mut out = Vec::with_capacity(n + 1);
    let (mut a, mut b) = match kind {
        LucasKind::U => (R::zero(&ctx), R::one(&ctx)),
        LucasKind::V => (R::from_i64(&ctx, 2), x.clone()),
    };
    out.push(a.clone());
    for _ in 0..n {
        out.push(b.clone());
        let next = x.mul(&b).sub(&y.mul(&a));
        a = b;
        b = next;
    }
    out
}

pub fn lucas_eval<R: Ring>(kind: LucasKind, n: usize, x: &R, y: &R) -> R {
    lucas_seq(kind, n, x, y).pop().expect("nonempty")
}

/// One-parameter form, `y = 1`.
pub fn lucas_eval1<R: Ring>(kind: LucasKind, n: usize, x: &R) -> R {
    lucas_eval(kind, n, x, &R::one(&x.ctx()))
}

fn poly_seq(kind: LucasKind, n: usize) -> DensePoly<BigRational> {
    let x = DensePoly::<BigRational>::x(());
    let one = DensePoly::from_i64s((), &[1]);
    lucas_eval(kind, n, &x, &one).trimmed()
}

pub fn u_poly(n: usize) -> DensePoly<BigRational> {
    poly_seq(LucasKind::U, n)
}

pub fn v_poly(n: usize) -> DensePoly<BigRational> {
    poly_seq(LucasKind::V, n)
}

/// `sum_{k=1}^{n-1} w_k(x, y) k^(-d)` for each `d` in `ds`, where `n` is the
/// length of the inverse table, in a single pass over `k`.
pub fn lucas_weighted_sums<R: Ring>(
    kind: LucasKind,
    ds: &[u32],
    x: &R,
    y: &R,
    inv: &InverseTable<R>,
) -> Vec<R> {
    let ctx = x.ctx();
    let mut sums = vec![R::zero(&ctx); ds.len()];
    let (mut a, mut b) = match kind {
        LucasKind::U => (R::zero(&ctx), R::one(&ctx)),
        LucasKind::V => (R::from_i64(&ctx, 2), x.clone()),
    };
    let mut order: Vec<usize> = (0..ds.len()).collect();
    order.sort_by_key(|&i| ds[i]);
    for k in 1..inv.len() {
        let ik = inv.get(k);
        let mut w = b.clone();
        let mut done = 0;
        for &i in &order {
            while done < ds[i] {
                w = w.mul(ik);
                done += 1;
            }
            sums[i] = sums[i].add(&w);
        }
        let next = x.mul(&b).sub(&y.mul(&a));
        a = b;
        b = next;
    }
    sums
}

pub fn lucas_weighted_sum<R: Ring>(kind: LucasKind, d: u32, x: &R, y: &R, inv: &InverseTable<R>) -> R {
    lucas_weighted_sums(kind, &[d], x, y, inv).pop().expect("one order")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{PadicApprox, PadicContext};
    use crate::polylog::finite_polylog;
    use crate::rings::QuadExt;

    fn q(cs: &[i64]) -> DensePoly<BigRational> {
        DensePoly::from_i64s((), cs)
    }

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(u_poly(3), q(&[-1, 0, 1]));
        assert_eq!(v_poly(4), q(&[2, 0, -4, 0, 1]));
        assert!(u_poly(0).is_zero());
    }

    #[test]
    fn evaluated_examples() {
        let t = DensePoly::<BigRational>::x(());
        assert_eq!(lucas_eval(LucasKind::V, 3, &t, &t), q(&[0, 0, -3, 1]));
        assert_eq!(lucas_eval1(LucasKind::U, 4, &int(-2)), int(-4));
        assert_eq!(lucas_eval1(LucasKind::U, 1, &int(17)), int(1));
    }

    #[test]
    fn t_equals_four_sum() {
        let ctx = PadicContext::new(11, 2, 2).unwrap();
        let inv = InverseTable::<PadicApprox>::new(&ctx, 11);
        let x = PadicApprox::from_i64(ctx, -2);
        let one = PadicApprox::one(ctx);
        let s = lucas_weighted_sum(LucasKind::U, 2, &x, &one, &inv);
        let l1 = finite_polylog(1, &PadicApprox::from_i64(ctx, -1), &inv);
        assert_eq!(s.reduce(2).unwrap(), l1.neg().reduce(2).unwrap());
    }

    #[test]
    fn v_sum_at_sixth_root() {
        let ctx = PadicContext::new(13, 2, 2).unwrap();
        let ext = QuadExt::<PadicApprox>::new(PadicApprox::one(ctx), PadicApprox::one(ctx));
        let inv = InverseTable::new(&ext, 13);
        let alpha = ext.alpha();
        let x = alpha.add(&alpha.conj());
        let s = lucas_weighted_sum(LucasKind::V, 1, &x, &Ring::one(&ext), &inv);
        let direct = finite_polylog(1, &alpha, &inv).add(&finite_polylog(1, &alpha.conj(), &inv));
        assert_eq!(s, direct);
    }

    #[test]
    fn multi_order_pass_matches_single() {
        let inv = InverseTable::<BigRational>::new(&(), 9);
        let x = int(3);
        let y = int(-2);
        let all = lucas_weighted_sums(LucasKind::V, &[3, 1, 2], &x, &y, &inv);
        for (i, d) in [3, 1, 2].into_iter().enumerate() {
            assert_eq!(all[i], lucas_weighted_sum(LucasKind::V, d, &x, &y, &inv));
        }
        let empty = InverseTable::<BigRational>::new(&(), 1);
        assert_eq!(lucas_weighted_sum(LucasKind::U, 2, &x, &y, &empty), int(0));
    }
}
