use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use polycong_core::arith::{
    exact_eval, fermat_quotient, padic_eval, ArithError, Expr, PadicApprox, PadicContext,
};
use proptest::prelude::*;

/// `q mod p^j` by exact integer arithmetic, or the valuation when it is negative.
fn rational_mod(q: &BigRational, p: u64, j: u32) -> Result<u64, i64> {
    if q.is_zero() {
        return Ok(0);
    }
    let pb = BigInt::from(p);
    let (mut n, mut d) = (q.numer().clone(), q.denom().clone());
    let mut v = 0i64;
    while (&n % &pb).is_zero() {
        n /= &pb;
        v += 1;
    }
    while (&d % &pb).is_zero() {
        d /= &pb;
        v -= 1;
    }
    if v < 0 {
        return Err(v);
    }
    let m = pb.pow(j);
    let inv = d.extended_gcd(&m).x.mod_floor(&m);
    let r = (n * inv * pb.pow(v as u32)).mod_floor(&m);
    Ok(r.to_u64().unwrap())
}

fn leaf(p: u64) -> impl Strategy<Value = Expr> {
    (-2i32..=4, 1i64..60, any::<bool>()).prop_map(move |(v, u, neg)| {
        let u = if u % p as i64 == 0 { u + 1 } else { u };
        let u = if neg { -u } else { u };
        let pv = BigInt::from(p).pow(v.unsigned_abs());
        let q = if v >= 0 { BigRational::from_integer(pv * u) } else { BigRational::new(u.into(), pv) };
        Expr::Rational(q)
    })
}

fn tree(p: u64) -> impl Strategy<Value = Expr> {
    leaf(p).prop_recursive(8, 48, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::add(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::sub(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::mul(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::div(a, b)),
            (inner, -2i32..=3).prop_map(|(a, e)| Expr::pow(a, e)),
        ]
    })
}

/// Checks one tree: every residue the kernel reports is the exact one, and a
/// refusal is either honest precision loss or a genuine pole.
fn agrees(e: &Expr, p: u64) -> Result<(), String> {
    let exact = exact_eval(e);
    for k in 1..=4 {
        let ctx = PadicContext::new(p, k, 2).unwrap();
        let approx = padic_eval(e, ctx);
        for j in 1..=k {
            let got = approx.as_ref().map_err(Clone::clone).and_then(|x| x.reduce(j));
            match (&exact, got) {
                (Ok(q), Ok(r)) => {
                    if rational_mod(q, p, j) != Ok(r) {
                        return Err(format!(
                            "p={p} k={k} j={j}: kernel {r}, exact {:?}",
                            rational_mod(q, p, j)
                        ));
                    }
                }
                (Ok(q), Err(ArithError::NegativeValuation(_))) => {
                    if rational_mod(q, p, j).is_ok() {
                        return Err(format!("p={p} k={k} j={j}: spurious pole for {q}"));
                    }
                }
                (Ok(_), Err(ArithError::PrecisionExhausted { .. } | ArithError::DivisionByZero)) => {}
                (Ok(_), Err(other)) => return Err(format!("unexpected {other}")),
                (Err(_), Ok(r)) => return Err(format!("kernel {r} where exact evaluation has a pole")),
                (Err(_), Err(_)) => {}
            }
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_trees_agree(e in tree(7)) {
        prop_assert_eq!(agrees(&e, 7), Ok(()));
    }

    #[test]
    fn random_trees_agree_at_five(e in tree(5)) {
        prop_assert_eq!(agrees(&e, 5), Ok(()));
    }

    #[test]
    fn random_trees_agree_at_eleven(e in tree(11)) {
        prop_assert_eq!(agrees(&e, 11), Ok(()));
    }

    #[test]
    fn random_trees_agree_at_thirteen(e in tree(13)) {
        prop_assert_eq!(agrees(&e, 13), Ok(()));
    }

    #[test]
    fn reduce_is_additive(a in -10_000i64..10_000, b in 1i64..500, c in -10_000i64..10_000, d in 1i64..500,
                          p in prop::sample::select(vec![5u64, 7, 11, 13]), j in 1u32..=4) {
        let ctx = PadicContext::new(p, 4, 2).unwrap();
        let x = PadicApprox::from_rational(ctx, &BigRational::new(a.into(), b.into()));
        let y = PadicApprox::from_rational(ctx, &BigRational::new(c.into(), d.into()));
        if let (Ok(rx), Ok(ry), Ok(rs)) = (x.reduce(j), y.reduce(j), x.add(&y).reduce(j)) {
            prop_assert_eq!(rs, (rx + ry) % ctx.pow(j));
        }
    }

    #[test]
    fn reduce_is_multiplicative(a in -10_000i64..10_000, b in 1i64..500, c in -10_000i64..10_000, d in 1i64..500,
                                p in prop::sample::select(vec![5u64, 7, 11, 13]), j in 1u32..=4) {
        let ctx = PadicContext::new(p, 4, 2).unwrap();
        let x = PadicApprox::from_rational(ctx, &BigRational::new(a.into(), b.into()));
        let y = PadicApprox::from_rational(ctx, &BigRational::new(c.into(), d.into()));
        if let (Ok(rx), Ok(ry), Ok(rm)) = (x.reduce(j), y.reduce(j), x.mul(&y).reduce(j)) {
            prop_assert_eq!(rm as u128, (rx as u128 * ry as u128) % ctx.pow(j) as u128);
        }
    }
}

#[test]
fn fermat_quotient_is_logarithmic() {
    for p in polycong_core::arith::primes_in(3, 100) {
        let ctx = PadicContext::new(p, 1, 2).unwrap();
        let q = |a: i64| fermat_quotient(a, ctx).unwrap().reduce(1).unwrap();
        for a in 1..=50i64 {
            for b in 1..=50i64 {
                if a % p as i64 == 0 || b % p as i64 == 0 {
                    continue;
                }
                assert_eq!(q(a * b), (q(a) + q(b)) % p, "p={p} a={a} b={b}");
            }
        }
    }
}

#[test]
fn fermat_quotient_against_big_integers() {
    for p in [5u64, 7, 11, 13, 1093] {
        let ctx = PadicContext::new(p, 3, 2).unwrap();
        for a in [2i64, 3, 10, -4] {
            if a % p as i64 == 0 {
                continue;
            }
            let big: BigInt = (BigInt::from(a).pow(p as u32 - 1) - 1) / BigInt::from(p);
            let m = BigInt::from(p).pow(3);
            let want = big.mod_floor(&m).to_u64().unwrap();
            assert_eq!(fermat_quotient(a, ctx).unwrap().reduce(3).unwrap(), want, "p={p} a={a}");
        }
    }
    // Wieferich prime
    let ctx = PadicContext::new(1093, 1, 2).unwrap();
    assert_eq!(fermat_quotient(2, ctx).unwrap().reduce(1).unwrap(), 0);
}

#[test]
fn oracle_helper_sanity() {
    let q = BigRational::new(25.into(), 12.into());
    assert_eq!(rational_mod(&q, 5, 2), Ok(0));
    assert_eq!(rational_mod(&q, 5, 3), Ok(25 * 73 % 125));
    assert_eq!(rational_mod(&BigRational::new(1.into(), 5.into()), 5, 1), Err(-1));
    assert!(BigRational::one().is_positive());
}
