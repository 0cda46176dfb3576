//! Integer, rational and truncated p-adic arithmetic.

pub mod expr;
pub mod modular;
pub mod padic;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

pub use expr::{exact_eval, padic_eval, Expr};
pub use modular::{
    add_mod, checked_prime_power, inv_mod, is_prime, legendre, mul_mod, pow_mod, primes_in, reduce_signed,
    sub_mod, Residue,
};
pub use padic::{valuation_of, PadicApprox, PadicContext, DEFAULT_GUARD};

/// Exact rationals used by the oracles and the identity checker.
pub type ExactRational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: i128, modulus: u64 },
    #[error("invalid modulus {0}")]
    InvalidModulus(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("invalid precision k={k}, g={g}")]
    InvalidPrecision { k: u32, g: u32 },
    #[error("precision exhausted: need p^{needed}, value known to p^{available}")]
    PrecisionExhausted { needed: u32, available: i32 },
    #[error("negative valuation {0}: value is not p-integral")]
    NegativeValuation(i32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: u64, limit: u64 },
    #[error("expression contains an inexact leaf")]
    InexactLeaf,
}

/// `C(n, k)` exactly; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(a^(p-1) - 1) / p` to the full `k + g` digits of `ctx`.
pub fn fermat_quotient(a: i64, ctx: PadicContext) -> Result<PadicApprox, ArithError> {
    let p = ctx.p();
    if a.rem_euclid(p as i64) == 0 {
        return Err(ArithError::NotInvertible { value: a as i128, modulus: p });
    }
    let m = BigUint::from(p).pow(ctx.digits() + 1);
    let base = BigInt::from(a).mod_floor(&BigInt::from(m.clone())).to_biguint().unwrap();
    let r = base.modpow(&BigUint::from(p - 1), &m);
    let r = if r.is_one() { BigUint::from(0u8) } else { (r + &m - 1u8) % &m };
    debug_assert!((&r % p).to_u64() == Some(0));
    if r.is_zero() && a != 1 {
        return Ok(PadicApprox::zero_to(ctx, ctx.digits() as i32));
    }
    Ok(PadicApprox::from_bigint(ctx, &BigInt::from(r / p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(50, 25), BigInt::from(126_410_606_437_752u64));
        assert_eq!(binomial(4, 5), BigInt::zero());
        assert_eq!(binomial(7, 0), BigInt::one());
    }

    #[test]
    fn fermat_quotient_examples() {
        let c7 = PadicContext::new(7, 1, 2).unwrap();
        assert_eq!(fermat_quotient(2, c7).unwrap().reduce(1).unwrap(), 2);
        assert!(fermat_quotient(1, c7).unwrap().is_zero());
        assert!(fermat_quotient(14, c7).is_err());
        let c11 = PadicContext::new(11, 1, 2).unwrap();
        assert_eq!(fermat_quotient(3, c11).unwrap().reduce(1).unwrap(), ((59049u64 - 1) / 11) % 11);
    }

    #[test]
    fn fermat_quotient_negative_base() {
        let c = PadicContext::new(13, 3, 2).unwrap();
        let exact = (BigInt::from(-5).pow(12) - 1) / 13;
        let want = PadicApprox::from_bigint(c, &exact);
        assert_eq!(fermat_quotient(-5, c).unwrap().reduce(3), want.reduce(3));
    }
}
