//! Truncated p-adic numbers in (valuation, unit) form.
//!
//! A nonzero [`PadicApprox`] stands for `u * p^v + O(p^(v + prec))` where `u` is a
//! unit known modulo `p^prec`. Relative precision starts at `k + g` digits for exact
//! inputs; multiplication keeps the smaller relative precision, and additions whose
//! leading digits cancel consume digits. A zero carries the absolute precision to
//! which it is known to vanish (`None` for an exact zero).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::modular::{checked_prime_power, inv_mod, is_prime, mul_mod, sub_mod};
use super::{ArithError, Residue};

pub const DEFAULT_GUARD: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PadicContext {
    p: u64,
    k: u32,
    g: u32,
}

impl PadicContext {
    /// A context for the odd prime `p`, target precision `k` and `g` guard digits.
    pub fn new(p: u64, k: u32, g: u32) -> Result<Self, ArithError> {
        if p == 2 || !is_prime(p) {
            return Err(ArithError::NotOddPrime(p));
        }
        if k == 0 {
            return Err(ArithError::InvalidPrecision { k, g });
        }
        if checked_prime_power(p, k + g).is_none() {
            return Err(ArithError::InvalidPrecision { k, g });
        }
        Ok(PadicContext { p, k, g })
    }

    pub fn with_default_guard(p: u64, k: u32) -> Result<Self, ArithError> {
        Self::new(p, k, DEFAULT_GUARD)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    /// Total carried digits `k + g`.
    pub fn digits(&self) -> u32 {
        self.k + self.g
    }

    /// `p^(k+g)`, the modulus of internal unit arithmetic.
    pub fn modulus(&self) -> u64 {
        self.pow(self.digits())
    }

    /// `p^e` for `e <= k + g`.
    #[inline]
    pub fn pow(&self, e: u32) -> u64 {
        debug_assert!(e <= self.digits());
        let mut r = 1u64;
        for _ in 0..e {
            r *= self.p;
        }
        r
    }

    /// The same prime with a different target precision, keeping the guard.
    pub fn with_k(&self, k: u32) -> Result<Self, ArithError> {
        Self::new(self.p, k, self.g)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Repr {
    /// Known to vanish modulo `p^abs`; `None` is an exact zero.
    Zero {
        abs: Option<i32>,
    },
    Unit {
        v: i32,
        u: u64,
        prec: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub struct PadicApprox {
    ctx: PadicContext,
    repr: Repr,
}

impl PadicApprox {
    pub fn zero(ctx: PadicContext) -> Self {
        PadicApprox { ctx, repr: Repr::Zero { abs: None } }
    }

    pub fn one(ctx: PadicContext) -> Self {
        PadicApprox { ctx, repr: Repr::Unit { v: 0, u: 1, prec: ctx.digits() } }
    }

    /// A zero known only modulo `p^abs`.
    pub fn zero_to(ctx: PadicContext, abs: i32) -> Self {
        PadicApprox { ctx, repr: Repr::Zero { abs: Some(abs) } }
    }

    /// `u * p^v` with `u` a unit known to `prec` digits (clamped to `k + g`).
    pub fn from_parts(ctx: PadicContext, v: i32, u: u64, prec: u32) -> Result<Self, ArithError> {
        let prec = prec.min(ctx.digits());
        if prec == 0 {
            return Ok(Self::zero_to(ctx, v));
        }
        if u.is_multiple_of(ctx.p) {
            return Err(ArithError::NotInvertible { value: u as i128, modulus: ctx.p });
        }
        Ok(PadicApprox { ctx, repr: Repr::Unit { v, u: u % ctx.pow(prec), prec } })
    }

    pub fn from_i64(ctx: PadicContext, n: i64) -> Self {
        Self::from_i128(ctx, n as i128)
    }

    pub fn from_i128(ctx: PadicContext, mut n: i128) -> Self {
        if n == 0 {
            return Self::zero(ctx);
        }
        let p = ctx.p as i128;
        let mut v = 0;
        while n % p == 0 {
            n /= p;
            v += 1;
        }
        let m = ctx.modulus();
        let u = n.rem_euclid(m as i128) as u64;
        PadicApprox { ctx, repr: Repr::Unit { v, u, prec: ctx.digits() } }
    }

    pub fn from_bigint(ctx: PadicContext, n: &BigInt) -> Self {
        if let Some(small) = n.to_i128() {
            return Self::from_i128(ctx, small);
        }
        let p = BigInt::from(ctx.p);
        let mut n = n.clone();
        let mut v = 0;
        loop {
            let (q, r) = n.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            n = q;
            v += 1;
        }
        let m = BigInt::from(ctx.modulus());
        let u = n.mod_floor(&m).to_u64().expect("residue below modulus");
        PadicApprox { ctx, repr: Repr::Unit { v, u, prec: ctx.digits() } }
    }

    /// Exact rational input: `v = v_p(num) - v_p(den)`, unit part reduced mod `p^(k+g)`.
    pub fn from_rational(ctx: PadicContext, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero(ctx);
        }
        let num = Self::from_bigint(ctx, q.numer());
        let den = Self::from_bigint(ctx, q.denom());
        num.div(&den).expect("nonzero denominator")
    }

    /// `num / den` for machine integers.
    pub fn from_ratio(ctx: PadicContext, num: i128, den: i128) -> Result<Self, ArithError> {
        if den == 0 {
            return Err(ArithError::DivisionByZero);
        }
        Self::from_i128(ctx, num).div(&Self::from_i128(ctx, den))
    }

    /// Reads a residue modulo `p^e` as a p-adic integer known to absolute precision `e`.
    pub fn from_residue(ctx: PadicContext, r: Residue) -> Self {
        let modulus = r.modulus();
        let mut e = 0u32;
        let mut m = modulus;
        while m > 1 {
            debug_assert_eq!(m % ctx.p, 0, "modulus must be a power of p");
            m /= ctx.p;
            e += 1;
        }
        let e = e.min(ctx.digits());
        let mut value = r.value() % ctx.pow(e);
        if value == 0 {
            return Self::zero_to(ctx, e as i32);
        }
        let mut v = 0u32;
        while value.is_multiple_of(ctx.p) {
            value /= ctx.p;
            v += 1;
        }
        PadicApprox { ctx, repr: Repr::Unit { v: v as i32, u: value, prec: e - v } }
    }

    pub fn ctx(&self) -> PadicContext {
        self.ctx
    }

    /// True when the value is indistinguishable from zero.
    pub fn is_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero { .. })
    }

    pub fn is_exact_zero(&self) -> bool {
        matches!(self.repr, Repr::Zero { abs: None })
    }

    /// Valuation of a nonzero value.
    pub fn valuation(&self) -> Option<i32> {
        match self.repr {
            Repr::Unit { v, .. } => Some(v),
            Repr::Zero { .. } => None,
        }
    }

    pub fn unit(&self) -> Option<u64> {
        match self.repr {
            Repr::Unit { u, .. } => Some(u),
            Repr::Zero { .. } => None,
        }
    }

    /// Relative precision in digits (0 for zeros).
    pub fn relative_precision(&self) -> u32 {
        match self.repr {
            Repr::Unit { prec, .. } => prec,
            Repr::Zero { .. } => 0,
        }
    }

    /// Exponent `e` such that the value is known modulo `p^e`; `None` when exact zero.
    pub fn absolute_precision(&self) -> Option<i32> {
        match self.repr {
            Repr::Unit { v, prec, .. } => Some(v + prec as i32),
            Repr::Zero { abs } => abs,
        }
    }

    /// Guard digits consumed.
    pub fn lost(&self) -> u32 {
        let n = self.ctx.digits();
        match self.repr {
            Repr::Unit { prec, .. } => n - prec,
            Repr::Zero { abs: None } => 0,
            Repr::Zero { abs: Some(a) } => n.saturating_sub(a.max(0) as u32),
        }
    }

    pub fn neg(&self) -> Self {
        match self.repr {
            Repr::Zero { .. } => *self,
            Repr::Unit { v, u, prec } => {
                let m = self.ctx.pow(prec);
                PadicApprox { ctx: self.ctx, repr: Repr::Unit { v, u: sub_mod(0, u, m), prec } }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ctx, other.ctx);
        let ctx = self.ctx;
        match (self.repr, other.repr) {
            (Repr::Zero { abs: a }, Repr::Zero { abs: b }) => {
                let abs = match (a, b) {
                    (None, x) | (x, None) => x,
                    (Some(x), Some(y)) => Some(x.min(y)),
                };
                PadicApprox { ctx, repr: Repr::Zero { abs } }
            }
            (Repr::Zero { abs }, Repr::Unit { v, u, prec })
            | (Repr::Unit { v, u, prec }, Repr::Zero { abs }) => match abs {
                None => PadicApprox { ctx, repr: Repr::Unit { v, u, prec } },
                Some(a) => {
                    let top = a.min(v + prec as i32);
                    if top <= v {
                        Self::zero_to(ctx, top)
                    } else {
                        let prec = (top - v) as u32;
                        PadicApprox { ctx, repr: Repr::Unit { v, u: u % ctx.pow(prec), prec } }
                    }
                }
            },
            (Repr::Unit { v: va, u: ua, prec: pa }, Repr::Unit { v: vb, u: ub, prec: pb }) => {
                let vmin = va.min(vb);
                let abs = (va + pa as i32).min(vb + pb as i32);
                let width = (abs - vmin) as u32;
                let m = ctx.pow(width);
                let lift = |v: i32, u: u64| -> u64 {
                    let shift = (v - vmin) as u32;
                    if shift >= width {
                        0
                    } else {
                        mul_mod(u % m, ctx.pow(shift), m)
                    }
                };
                let s = (lift(va, ua) + lift(vb, ub)) % m;
                if s == 0 {
                    return Self::zero_to(ctx, abs);
                }
                let mut s = s;
                let mut w = 0u32;
                while s.is_multiple_of(ctx.p) {
                    s /= ctx.p;
                    w += 1;
                }
                PadicApprox { ctx, repr: Repr::Unit { v: vmin + w as i32, u: s, prec: width - w } }
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ctx, other.ctx);
        let ctx = self.ctx;
        match (self.repr, other.repr) {
            (Repr::Zero { abs: None }, _) | (_, Repr::Zero { abs: None }) => Self::zero(ctx),
            (Repr::Zero { abs: Some(a) }, Repr::Zero { abs: Some(b) }) => Self::zero_to(ctx, a + b),
            (Repr::Zero { abs: Some(a) }, Repr::Unit { v, .. })
            | (Repr::Unit { v, .. }, Repr::Zero { abs: Some(a) }) => Self::zero_to(ctx, a + v),
            (Repr::Unit { v: va, u: ua, prec: pa }, Repr::Unit { v: vb, u: ub, prec: pb }) => {
                let prec = pa.min(pb);
                let m = ctx.pow(prec);
                PadicApprox { ctx, repr: Repr::Unit { v: va + vb, u: mul_mod(ua % m, ub % m, m), prec } }
            }
        }
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        match self.repr {
            Repr::Zero { .. } => Err(ArithError::DivisionByZero),
            Repr::Unit { v, u, prec } => {
                let m = self.ctx.pow(prec);
                let inv = if m == 1 { 0 } else { inv_mod(u as i128, m)? };
                Ok(PadicApprox { ctx: self.ctx, repr: Repr::Unit { v: -v, u: inv, prec } })
            }
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i32) -> Result<Self, ArithError> {
        let base = if e < 0 { self.inv()? } else { *self };
        let mut acc = Self::one(self.ctx);
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            n >>= 1;
        }
        Ok(acc)
    }

    /// Exact multiplication by `p^j` (a pure valuation shift).
    pub fn shift(&self, j: i32) -> Self {
        match self.repr {
            Repr::Zero { abs: None } => *self,
            Repr::Zero { abs: Some(a) } => Self::zero_to(self.ctx, a + j),
            Repr::Unit { v, u, prec } => {
                PadicApprox { ctx: self.ctx, repr: Repr::Unit { v: v + j, u, prec } }
            }
        }
    }

    /// `(u * p^v) mod p^j`.
    pub fn reduce(&self, j: u32) -> Result<u64, ArithError> {
        let ji = j as i32;
        match self.repr {
            Repr::Zero { abs: None } => Ok(0),
            Repr::Zero { abs: Some(a) } => {
                if a >= ji {
                    Ok(0)
                } else {
                    Err(ArithError::PrecisionExhausted { needed: j, available: a })
                }
            }
            Repr::Unit { v, u, prec } => {
                if v < 0 {
                    return Err(ArithError::NegativeValuation(v));
                }
                let abs = v + prec as i32;
                if abs < ji || j > self.ctx.digits() {
                    return Err(ArithError::PrecisionExhausted { needed: j, available: abs });
                }
                if v >= ji {
                    return Ok(0);
                }
                let m = self.ctx.pow(j);
                Ok(mul_mod(u % m, self.ctx.pow(v as u32), m))
            }
        }
    }

    /// Same as [`reduce`](Self::reduce) but returns a [`Residue`] modulo `p^j`.
    pub fn to_residue(&self, j: u32) -> Result<Residue, ArithError> {
        Ok(Residue::from_u64(self.reduce(j)?, self.ctx.pow(j)))
    }

    /// Lifts the value back to a rational `u * p^v` with `u` the stored representative.
    pub fn to_rational(&self) -> BigRational {
        match self.repr {
            Repr::Zero { .. } => BigRational::zero(),
            Repr::Unit { v, u, .. } => {
                let p = BigInt::from(self.ctx.p);
                let unit = BigRational::from_integer(BigInt::from(u));
                if v >= 0 {
                    unit * BigRational::from_integer(p.pow(v as u32))
                } else {
                    unit / BigRational::from_integer(p.pow((-v) as u32))
                }
            }
        }
    }
}

impl fmt::Debug for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.repr {
            Repr::Zero { abs: None } => write!(f, "0"),
            Repr::Zero { abs: Some(a) } => write!(f, "O({}^{})", self.ctx.p, a),
            Repr::Unit { v, u, prec } => {
                write!(f, "{}*{}^{} + O({}^{})", u, self.ctx.p, v, self.ctx.p, v + prec as i32)
            }
        }
    }
}

impl fmt::Display for PadicApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// p-adic valuation of a nonzero big integer.
pub fn valuation_of(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::inv_mod;

    fn ctx(p: u64, k: u32, g: u32) -> PadicContext {
        PadicContext::new(p, k, g).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn context_validation() {
        assert!(PadicContext::new(4, 2, 2).is_err());
        assert!(PadicContext::new(2, 2, 2).is_err());
        assert!(PadicContext::new(7, 0, 2).is_err());
        assert!(PadicContext::new(997, 4, 2).is_ok());
        assert!(PadicContext::new(997, 6, 2).is_err());
        assert_eq!(ctx(5, 2, 2).modulus(), 625);
    }

    #[test]
    fn rational_with_positive_valuation() {
        let c = ctx(5, 2, 2);
        let x = PadicApprox::from_rational(c, &rat(25, 12));
        assert_eq!(x.valuation(), Some(2));
        assert_eq!(x.unit(), Some(inv_mod(12, 625).unwrap()));
    }

    #[test]
    fn rational_with_negative_valuation() {
        let x = PadicApprox::from_rational(ctx(7, 2, 2), &rat(9, 7));
        assert_eq!(x.valuation(), Some(-1));
        assert_eq!(x.unit(), Some(9));
        assert!(matches!(x.reduce(1), Err(ArithError::NegativeValuation(-1))));
    }

    #[test]
    fn zero_rational() {
        assert!(PadicApprox::from_rational(ctx(5, 2, 2), &rat(0, 1)).is_exact_zero());
    }

    #[test]
    fn halves_sum_to_one() {
        let c = ctx(5, 2, 2);
        let h = PadicApprox::from_rational(c, &rat(1, 2));
        let s = h.add(&h);
        assert_eq!(s.valuation(), Some(0));
        assert_eq!(s.unit(), Some(1));
    }

    #[test]
    fn cancellation_then_exact_shift() {
        let c = ctx(5, 2, 2);
        let a = PadicApprox::from_i64(c, 1 + 5 * 3);
        let one = PadicApprox::one(c);
        let d = a.sub(&one);
        assert_eq!(d.valuation(), Some(1));
        assert_eq!(d.lost(), 1);
        let q = d.shift(-1);
        assert_eq!(q.reduce(2).unwrap(), 3);
    }

    #[test]
    fn total_cancellation_keeps_absolute_precision() {
        let c = ctx(5, 2, 2);
        let x = PadicApprox::from_rational(c, &rat(7, 3));
        let z = x.sub(&x);
        assert!(z.is_zero());
        assert_eq!(z.absolute_precision(), Some(4));
        assert_eq!(z.reduce(2).unwrap(), 0);
        let w = z.shift(-3);
        assert!(matches!(w.reduce(2), Err(ArithError::PrecisionExhausted { .. })));
    }

    #[test]
    fn reduce_examples() {
        let c = ctx(5, 2, 2);
        assert_eq!(PadicApprox::from_parts(c, 2, 7, 4).unwrap().reduce(1).unwrap(), 0);
        let c7 = ctx(7, 2, 2);
        assert_eq!(PadicApprox::from_parts(c7, 0, 9, 4).unwrap().reduce(1).unwrap(), 2);
        assert!(matches!(
            PadicApprox::from_parts(c7, -1, 3, 4).unwrap().reduce(1),
            Err(ArithError::NegativeValuation(-1))
        ));
    }

    #[test]
    fn residue_roundtrip() {
        let c = ctx(5, 3, 2);
        let r = Residue::from_u64(50, 125);
        let x = PadicApprox::from_residue(c, r);
        assert_eq!(x.valuation(), Some(2));
        assert_eq!(x.absolute_precision(), Some(3));
        assert_eq!(x.reduce(3).unwrap(), 50);
        let z = PadicApprox::from_residue(c, Residue::from_u64(0, 25));
        assert_eq!(z.absolute_precision(), Some(2));
    }

    #[test]
    fn inverse_and_power() {
        let c = ctx(7, 3, 2);
        let x = PadicApprox::from_rational(c, &rat(14, 3));
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), PadicApprox::one(c));
        assert_eq!(x.pow(-2).unwrap().valuation(), Some(-2));
        assert!(PadicApprox::zero(c).inv().is_err());
    }

    #[test]
    fn valuation_of_bigints() {
        assert_eq!(valuation_of(&BigInt::from(5369), 7), Some(1));
        assert_eq!(valuation_of(&BigInt::from(0), 7), None);
    }
}
