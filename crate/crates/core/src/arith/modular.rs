//! Word-sized modular arithmetic: residues modulo `m < 2^63`, modular inverses,
//! primality and the Legendre symbol.

use std::fmt;

use super::ArithError;

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Maps a signed integer to its representative in `[0, m)`.
#[inline]
pub fn reduce_signed(a: i128, m: u64) -> u64 {
    a.rem_euclid(m as i128) as u64
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn inv_mod(a: i128, m: u64) -> Result<u64, ArithError> {
    if m < 2 {
        return Err(ArithError::InvalidModulus(m));
    }
    let (mut old_r, mut r) = (reduce_signed(a, m) as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(ArithError::NotInvertible { value: a, modulus: m });
    }
    Ok(reduce_signed(old_s, m))
}

/// Deterministic trial division; the primes handled here are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d * d <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// All primes in `lo..=hi` by a simple sieve.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || lo > hi {
        return Vec::new();
    }
    let n = hi as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        if i as u64 >= lo {
            out.push(i as u64);
        }
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Legendre symbol via Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i8 {
    let r = pow_mod(reduce_signed(a as i128, p), (p - 1) / 2, p);
    if r == 0 {
        0
    } else if r == 1 {
        1
    } else {
        -1
    }
}

/// `p^e`, or `None` when it does not fit below `2^63`.
pub fn checked_prime_power(p: u64, e: u32) -> Option<u64> {
    let v = p.checked_pow(e)?;
    (v < 1 << 63).then_some(v)
}

/// An element of `Z/mZ`. The modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: i128, modulus: u64) -> Self {
        debug_assert!(modulus >= 1);
        Residue { value: reduce_signed(value, modulus), modulus }
    }

    pub fn from_u64(value: u64, modulus: u64) -> Self {
        Residue { value: value % modulus, modulus }
    }

    /// `num / den` as a residue; fails when `den` is not a unit.
    pub fn from_ratio(num: i128, den: i128, modulus: u64) -> Result<Self, ArithError> {
        let inv = inv_mod(den, modulus)?;
        Ok(Residue::from_u64(mul_mod(reduce_signed(num, modulus), inv, modulus), modulus))
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    /// Representative in `(-m/2, m/2]`.
    pub fn signed(self) -> i128 {
        if self.value > self.modulus / 2 {
            self.value as i128 - self.modulus as i128
        } else {
            self.value as i128
        }
    }

    pub fn inverse(self) -> Result<Self, ArithError> {
        Ok(Residue::from_u64(inv_mod(self.value as i128, self.modulus)?, self.modulus))
    }

    pub fn pow(self, exp: u64) -> Self {
        Residue::from_u64(pow_mod(self.value, exp, self.modulus), self.modulus)
    }

    /// Reduction to a smaller modulus dividing the current one.
    pub fn reduce_to(self, modulus: u64) -> Self {
        debug_assert_eq!(self.modulus % modulus, 0);
        Residue::from_u64(self.value, modulus)
    }
}

impl fmt::Debug for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl std::ops::Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Residue { value: add_mod(self.value, rhs.value, self.modulus), modulus: self.modulus }
    }
}

impl std::ops::Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Residue { value: sub_mod(self.value, rhs.value, self.modulus), modulus: self.modulus }
    }
}

impl std::ops::Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        debug_assert_eq!(self.modulus, rhs.modulus);
        Residue { value: mul_mod(self.value, rhs.value, self.modulus), modulus: self.modulus }
    }
}

impl std::ops::Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue { value: sub_mod(0, self.value, self.modulus), modulus: self.modulus }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        assert_eq!(inv_mod(3, 25).unwrap(), 17);
        assert_eq!(inv_mod(1, 7).unwrap(), 1);
        assert!(matches!(inv_mod(5, 25), Err(ArithError::NotInvertible { .. })));
        assert_eq!(inv_mod(-1, 7).unwrap(), 6);
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(legendre(7, 7), 0);
        assert_eq!(legendre(-1, 13), 1);
        assert_eq!(legendre(-1, 11), -1);
    }

    #[test]
    fn sieve_matches_trial_division() {
        let sieved = primes_in(1, 500);
        let trial: Vec<u64> = (1..=500).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, trial);
        assert_eq!(primes_in(5, 13), vec![5, 7, 11, 13]);
        assert!(primes_in(24, 28).is_empty());
    }

    #[test]
    fn residue_ops() {
        let m = 25;
        let a = Residue::new(-3, m);
        assert_eq!(a.value(), 22);
        assert_eq!((a * Residue::new(3, m)).value(), 16);
        assert_eq!(Residue::from_ratio(1, 12, 625).unwrap().value(), inv_mod(12, 625).unwrap());
        assert_eq!(a.signed(), -3);
    }
}
