#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use polycong_core::arith::{inv_mod, mul_mod, primes_in, PadicApprox, PadicContext, Residue};
use polycong_core::special::{bernoulli_mod, bernoulli_poly_mod, euler_mod, harmonic, mhs, SpecialConstants};

fn frac_mod(num: i64, den: i64, p: u64) -> u64 {
    let n = num.rem_euclid(p as i64) as u64;
    mul_mod(n, inv_mod(den as i128, p).unwrap(), p)
}

fn rational_mod(q: &BigRational, m: u64) -> u64 {
    let m = BigInt::from(m);
    let inv = q.denom().extended_gcd(&m).x;
    (q.numer() * inv).mod_floor(&m).to_u64().unwrap()
}

/// Exact `B_0..=B_n` by the Akiyama-Tanigawa algorithm (`B_1 = +1/2` there, flipped here).
fn exact_bernoulli(n: usize) -> Vec<BigRational> {
    let mut a: Vec<BigRational> = Vec::new();
    let mut out = Vec::new();
    for m in 0..=n {
        a.push(BigRational::new(1.into(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &a[j - 1] - &a[j];
            a[j - 1] = diff * BigRational::from_integer(BigInt::from(j));
        }
        out.push(a[0].clone());
    }
    if n >= 1 {
        out[1] = -out[1].clone();
    }
    out
}

#[test]
fn bernoulli_matches_exact_values() {
    let exact = exact_bernoulli(64);
    for p in primes_in(5, 67) {
        for m in 0..=(p - 3) as usize {
            assert_eq!(bernoulli_mod(m as u64, p).unwrap(), rational_mod(&exact[m], p), "B_{m} mod {p}");
        }
    }
}

#[test]
fn glaisher_harmonic_path() {
    for p in primes_in(7, 499) {
        let ctx = PadicContext::new(p, 2, 2).unwrap();
        let h2 = harmonic(p - 1, 2, ctx).shift(-1).reduce(1).unwrap();
        let b3 = bernoulli_mod(p - 3, p).unwrap();
        assert_eq!(h2, mul_mod(frac_mod(2, 3, p), b3, p), "weight 2 at p={p}");
        let h4 = harmonic(p - 1, 4, ctx).shift(-1).reduce(1).unwrap();
        let b5 = bernoulli_mod(p - 5, p).unwrap();
        assert_eq!(h4, mul_mod(frac_mod(4, 5, p), b5, p), "weight 4 at p={p}");
    }
}

#[test]
fn bernoulli_at_quarter_is_euler() {
    for p in primes_in(7, 499) {
        let lhs = bernoulli_poly_mod(p - 2, 1, 4, p).unwrap();
        let rhs = mul_mod(8, euler_mod(p - 3, p).unwrap(), p);
        assert_eq!(lhs, rhs, "p={p}");
    }
}

#[test]
fn elementary_symmetric_harmonic_sums() {
    for p in primes_in(7, 199) {
        // prod_{j<p} (1 + z/j), exact
        let mut e: Vec<BigRational> = vec![BigRational::from_integer(1.into())];
        for j in 1..p {
            let inv = BigRational::new(1.into(), BigInt::from(j));
            let mut next = e.clone();
            next.push(BigRational::zero());
            for (i, c) in e.iter().enumerate() {
                next[i + 1] += c * &inv;
            }
            e = next;
        }
        let p2 = p * p;
        let ctx = PadicContext::new(p, 2, 2).unwrap();
        for r in 1..=4usize {
            let exact = rational_mod(&e[r], p2);
            let via_mhs =
                mhs::<PadicApprox>(&ctx, &vec![1; r], p as usize - 1, None).unwrap().reduce(2).unwrap();
            assert_eq!(exact, via_mhs, "h_{r} at p={p}");
            let sign = if r % 2 == 1 { 1 } else { -1 };
            let b = bernoulli_mod(p - r as u64 - 1, p).unwrap();
            let want = p * mul_mod(frac_mod(sign, r as i64 + 1, p), b, p);
            assert_eq!(exact, want, "h_{r} congruence at p={p}");
        }
    }
}

#[test]
fn residue_class_sums() {
    for p in primes_in(5, 199) {
        let sc = SpecialConstants::new(p).unwrap();
        for m in [2i64, 3, 4, 6] {
            if (m as u64).is_multiple_of(p) {
                continue;
            }
            for d in 1..=3u32 {
                if p <= d as u64 + 3 {
                    continue;
                }
                for r in 0..m {
                    let mut lhs = Residue::from_u64(0, p);
                    for k in (1..p as i64).filter(|k| k % m == r) {
                        lhs = lhs + Residue::from_u64(k as u64, p).inverse().unwrap().pow(d as u64);
                    }
                    let y = (r - p as i64).rem_euclid(m);
                    let diff = sc.bernoulli_poly_diff(p - d as u64, (r, m), (y, m)).unwrap();
                    let scale = frac_mod(1, d as i64 * m.pow(d), p);
                    assert_eq!(lhs.value(), mul_mod(scale, diff, p), "p={p} m={m} r={r} d={d}");
                }
            }
        }
    }
}

#[test]
fn wolstenholme_valuations() {
    for p in primes_in(5, 499) {
        let ctx = PadicContext::new(p, 3, 2).unwrap();
        let h1 = harmonic(p - 1, 1, ctx);
        let h2 = harmonic(p - 1, 2, ctx);
        assert!(h1.valuation().is_none_or(|v| v >= 2), "p={p}");
        assert!(h2.valuation().is_none_or(|v| v >= 1), "p={p}");
        assert_eq!(h1.reduce(2).unwrap(), 0);
    }
}

#[test]
fn euler_matches_exact_values() {
    // E_0..E_10 of sech
    let exact = [1i64, -1, 5, -61, 1385, -50521];
    for p in primes_in(17, 101) {
        for (i, &e) in exact.iter().enumerate() {
            assert_eq!(
                euler_mod(2 * i as u64, p).unwrap(),
                e.rem_euclid(p as i64) as u64,
                "E_{} mod {p}",
                2 * i
            );
        }
    }
}
