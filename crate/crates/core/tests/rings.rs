#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use polycong_core::arith::Residue;
use polycong_core::rings::series::{series_pow_log, series_pow_log_by_products};
use polycong_core::rings::{AffineMap, DensePoly, QuadElem, QuadExt, Ring};
use proptest::prelude::*;

const M: u64 = 7 * 7 * 7;

fn ext(which: u8) -> QuadExt<Residue> {
    match which % 3 {
        0 => QuadExt::gaussian(&M),
        1 => QuadExt::omega6(&M),
        _ => QuadExt::golden(&M),
    }
}

fn elem(e: &QuadExt<Residue>, a: i64, b: i64) -> QuadElem<Residue> {
    e.elem(Residue::new(a as i128, M), Residue::new(b as i128, M))
}

fn qpoly(cs: &[i64]) -> DensePoly<BigRational> {
    DensePoly::from_i64s((), cs)
}

/// Signed Stirling numbers of the first kind `s(n, k)` for `n <= max`.
fn stirling1(max: usize) -> Vec<Vec<BigInt>> {
    let mut s = vec![vec![BigInt::zero(); max + 2]; max + 1];
    s[0][0] = BigInt::one();
    for n in 1..=max {
        for k in 1..=n {
            s[n][k] = &s[n - 1][k - 1] - BigInt::from(n - 1) * &s[n - 1][k];
        }
    }
    s
}

proptest! {
    #[test]
    fn quad_pow_is_iterated_product(which in 0u8..3, a in -500i64..500, b in -500i64..500, n in 0u64..=64) {
        let e = ext(which);
        let x = elem(&e, a, b);
        let mut acc = e.embed(Residue::from_u64(1, M));
        for _ in 0..n {
            acc = acc.mul(&x);
        }
        prop_assert_eq!(x.pow(n), acc);
    }

    #[test]
    fn conjugation_is_multiplicative(which in 0u8..3, a in -500i64..500, b in -500i64..500, c in -500i64..500, d in -500i64..500) {
        let e = ext(which);
        let (x, y) = (elem(&e, a, b), elem(&e, c, d));
        prop_assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
        prop_assert_eq!(x.add(&y).conj(), x.conj().add(&y.conj()));
        prop_assert_eq!(x.mul(&x.conj()), e.embed(x.norm()));
    }

    #[test]
    fn one_minus_is_an_involution(cs in prop::collection::vec(-1000i64..1000, 0..40)) {
        let f = qpoly(&cs);
        let g = f.compose_affine(&AffineMap::OneMinus).compose_affine(&AffineMap::OneMinus);
        prop_assert_eq!(g, f);
    }

    #[test]
    fn derivative_undoes_integration(cs in prop::collection::vec(-1000i64..1000, 0..=51)) {
        let f = qpoly(&cs);
        let g = f.integrate().unwrap();
        prop_assert!(Zero::is_zero(&g.coeff(0)));
        prop_assert_eq!(g.derivative(), f);
    }
}

#[test]
fn log_powers_against_stirling_numbers() {
    let n = 40;
    let s = stirling1(n);
    let mut fact = vec![BigInt::one()];
    for k in 1..=n {
        let next = &fact[k - 1] * BigInt::from(k);
        fact.push(next);
    }
    for d in 1..=5 {
        let closed = series_pow_log(d, n);
        let products = series_pow_log_by_products(d, n);
        assert_eq!(closed, products, "d={d}");
        for k in 0..=n {
            let want = BigRational::new(s[k][d].clone(), fact[k].clone());
            assert_eq!(closed[k], want, "d={d} k={k}");
        }
    }
}

#[test]
fn one_minus_example() {
    // x^2 -> (1-x)^2
    let f = qpoly(&[0, 0, 1]);
    assert_eq!(f.compose_affine(&AffineMap::OneMinus), qpoly(&[1, -2, 1]));
}
