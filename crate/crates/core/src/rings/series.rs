//! Truncated power series with rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients of `log(1+x)` through `x^n`.
pub fn log1p_series(n: usize) -> Vec<BigRational> {
    (0..=n)
        .map(|k| match k {
            0 => BigRational::zero(),
            _ => {
                let sign = if k % 2 == 1 { 1 } else { -1 };
                BigRational::new(sign.into(), (k as i64).into())
            }
        })
        .collect()
}

/// Product of two series truncated after `x^n`.
pub fn series_mul(a: &[BigRational], b: &[BigRational], n: usize) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); n + 1];
    for (i, x) in a.iter().enumerate().take(n + 1) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// `log(1+x)^d / d!` through `x^n`: the coefficient of `x^k` is the coefficient of
/// `y^d` in the falling factorial `y(y-1)...(y-k+1) / k!`.
pub fn series_pow_log(d: usize, n: usize) -> Vec<BigRational> {
    let mut falling: Vec<BigInt> = vec![BigInt::one()];
    let mut fact = BigInt::one();
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        if k > 0 {
            // multiply by (y - (k-1))
            let c = BigInt::from(k - 1);
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (i, a) in falling.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * &c;
            }
            falling = next;
            fact *= k;
        }
        let top = falling.get(d).cloned().unwrap_or_default();
        out.push(BigRational::new(top, fact.clone()));
    }
    out
}

/// The same series computed by repeated multiplication of `log(1+x)`.
pub fn series_pow_log_by_products(d: usize, n: usize) -> Vec<BigRational> {
    let log = log1p_series(n);
    let mut acc = vec![BigRational::zero(); n + 1];
    acc[0] = BigRational::one();
    let mut fact = BigInt::one();
    for i in 1..=d {
        acc = series_mul(&acc, &log, n);
        fact *= i;
    }
    let fact = BigRational::from_integer(fact);
    acc.into_iter().map(|c| c / &fact).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn first_power_is_log() {
        assert_eq!(series_pow_log(1, 3), vec![r(0, 1), r(1, 1), r(-1, 2), r(1, 3)]);
    }

    #[test]
    fn square_coefficients() {
        let s = series_pow_log(2, 3);
        assert_eq!(s[2], r(1, 2));
        assert_eq!(s[3], r(-1, 2));
    }

    #[test]
    fn agrees_with_products() {
        for d in 1..=5 {
            assert_eq!(series_pow_log(d, 40), series_pow_log_by_products(d, 40), "d={d}");
        }
    }
}
