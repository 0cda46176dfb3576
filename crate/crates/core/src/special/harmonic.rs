//! Harmonic and multiple harmonic sums.

use crate::arith::{ArithError, PadicApprox, PadicContext};
use crate::rings::Ring;

/// `H_n(d) = sum_{r=1}^{n} r^(-d)`.
pub fn harmonic(n: u64, d: u32, ctx: PadicContext) -> PadicApprox {
    let mut acc = PadicApprox::zero(ctx);
    for r in 1..=n {
        let term = PadicApprox::from_i64(ctx, r as i64).pow(-(d as i32)).expect("r > 0");
        acc = acc.add(&term);
    }
    acc
}

/// Running values `H_0(d), H_1(d), ..., H_n(d)` in any ring where `1..=n` are units.
pub fn harmonic_prefix<R: Ring>(ctx: &R::Ctx, n: usize, d: u32) -> Result<Vec<R>, ArithError> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = R::zero(ctx);
    out.push(acc.clone());
    for r in 1..=n {
        acc = acc.add(&unit_inverse::<R>(ctx, r)?.pow(d as u64));
        out.push(acc.clone());
    }
    Ok(out)
}

fn unit_inverse<R: Ring>(ctx: &R::Ctx, k: usize) -> Result<R, ArithError> {
    R::from_frac(ctx, 1, k as i64).ok_or(ArithError::NotInvertible { value: k as i128, modulus: 0 })
}

/// Nested sum over `0 < k_1 < ... < k_d <= upper` of
/// `x^(k_d) / (k_1^(e_1) ... k_d^(e_d))`, by one prefix-sum pass per level.
/// Without `x` the weight is 1.
pub fn mhs<R: Ring>(ctx: &R::Ctx, pattern: &[u32], upper: usize, x: Option<&R>) -> Result<R, ArithError> {
    assert!(!pattern.is_empty(), "pattern must be nonempty");
    let inv: Vec<R> = (1..=upper).map(|k| unit_inverse::<R>(ctx, k)).collect::<Result<_, _>>()?;
    // level[k] = sum over chains ending at index <= k (1-based, slot 0 empty)
    let mut prev: Vec<R> = vec![R::one(ctx); upper + 1];
    let last = pattern.len() - 1;
    for (level, &e) in pattern.iter().enumerate() {
        let mut cur = vec![R::zero(ctx); upper + 1];
        let mut acc = R::zero(ctx);
        let mut xpow = R::one(ctx);
        for k in 1..=upper {
            let below = if level == 0 { R::one(ctx) } else { prev[k - 1].clone() };
            let mut term = below.mul(&inv[k - 1].pow(e as u64));
            if level == last {
                if let Some(x) = x {
                    xpow = xpow.mul(x);
                    term = term.mul(&xpow);
                }
            }
            acc = acc.add(&term);
            cur[k] = acc.clone();
        }
        prev = cur;
    }
    Ok(if upper == 0 { R::zero(ctx) } else { prev[upper].clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Residue;
    use num_rational::BigRational;

    fn ctx(p: u64, k: u32) -> PadicContext {
        PadicContext::new(p, k, 2).unwrap()
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(4, 1, ctx(5, 2)).valuation(), Some(2));
        assert!(harmonic(0, 3, ctx(5, 2)).is_exact_zero());
        assert!(harmonic(6, 2, ctx(7, 2)).valuation().unwrap() >= 1);
    }

    #[test]
    fn h2_at_five() {
        let v: BigRational = mhs(&(), &[1, 1], 4, None).unwrap();
        assert_eq!(v, BigRational::new(35.into(), 24.into()));
        let r: Residue = mhs(&25, &[1, 1], 4, None).unwrap();
        assert_eq!(r.value(), 15);
    }

    #[test]
    fn depth_one_is_harmonic() {
        let c = ctx(11, 3);
        for n in 0..11 {
            let a: PadicApprox = mhs(&c, &[2], n, None).unwrap();
            assert_eq!(a.reduce(3).unwrap(), harmonic(n as u64, 2, c).reduce(3).unwrap());
        }
    }

    #[test]
    fn weighted_depth_one_is_polylog() {
        let x = BigRational::new(3.into(), 7.into());
        let v: BigRational = mhs(&(), &[1], 4, Some(&x)).unwrap();
        let mut want = BigRational::from_integer(0.into());
        for k in 1..=4i32 {
            want += x.pow(k) / BigRational::from_integer(k.into());
        }
        assert_eq!(v, want);
    }
}
