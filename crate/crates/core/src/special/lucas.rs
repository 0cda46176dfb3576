//! Fibonacci and Lucas numbers by fast doubling, and the Lucas quotient.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{PadicApprox, PadicContext, Residue};

/// `(F_n, L_n)` modulo `m` (any `m >= 1`).
pub fn fib_lucas_mod(n: u64, m: u64) -> (u64, u64) {
    let (f, f1) = fib_pair(n, m as u128);
    let l = (2 * f1 + m as u128 - f % m as u128) % m as u128;
    (f as u64, l as u64)
}

// (F_n, F_{n+1}) mod m
fn fib_pair(n: u64, m: u128) -> (u128, u128) {
    if n == 0 {
        return (0, 1 % m);
    }
    let (a, b) = fib_pair(n / 2, m);
    let c = a * ((2 * b + m - a) % m) % m;
    let d = (a * a + b * b) % m;
    if n.is_multiple_of(2) {
        (c, d)
    } else {
        (d, (c + d) % m)
    }
}

fn fib_pair_big(n: u64, m: &BigUint) -> (BigUint, BigUint) {
    if n == 0 {
        return (BigUint::zero(), BigUint::one() % m);
    }
    let (a, b) = fib_pair_big(n / 2, m);
    let c = (&a * ((&b * 2u8 + m - &a) % m)) % m;
    let d = (&a * &a + &b * &b) % m;
    if n.is_multiple_of(2) {
        (c, d)
    } else {
        let s = (&c + &d) % m;
        (d, s)
    }
}

/// `(F_n, L_n)` modulo `p^(k+g)`.
pub fn lucas_numbers(n: u64, ctx: PadicContext) -> (Residue, Residue) {
    let m = ctx.modulus();
    let (f, l) = fib_lucas_mod(n, m);
    (Residue::from_u64(f, m), Residue::from_u64(l, m))
}

/// `(L_p - 1) / p` to the full `k + g` digits.
pub fn lucas_quotient(ctx: PadicContext) -> PadicApprox {
    let p = ctx.p();
    let m = BigUint::from(p).pow(ctx.digits() + 1);
    let (f, f1) = fib_pair_big(p, &m);
    let l = (f1 * 2u8 + &m - f) % &m;
    let top = (l + &m - 1u8) % &m;
    debug_assert!((&top % p).is_zero());
    if top.is_zero() {
        return PadicApprox::zero_to(ctx, ctx.digits() as i32);
    }
    PadicApprox::from_bigint(ctx, &BigInt::from(top / p))
}
