//! Bernoulli and Euler numbers modulo `p`, and Bernoulli polynomial values.

use crate::arith::{inv_mod, is_prime, mul_mod, reduce_signed, ArithError};

/// Bernoulli numbers `B_0..=B_{p-2}` and even Euler numbers `E_0..=E_{p-3}` modulo `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialConstants {
    p: u64,
    bernoulli: Vec<u64>,
    euler: Vec<u64>,
}

impl SpecialConstants {
    pub fn new(p: u64) -> Result<Self, ArithError> {
        if p < 5 || !is_prime(p) {
            return Err(ArithError::NotOddPrime(p));
        }
        Ok(SpecialConstants { p, bernoulli: bernoulli_table(p), euler: euler_table(p) })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// `B_m mod p` for `m <= p-3`; odd `m > 1` gives 0 for any `m`.
    pub fn bernoulli(&self, m: u64) -> Result<u64, ArithError> {
        if m > 1 && m % 2 == 1 {
            return Ok(0);
        }
        if m + 3 > self.p {
            return Err(ArithError::IndexOutOfRange { index: m, limit: self.p - 3 });
        }
        Ok(self.bernoulli[m as usize])
    }

    /// `E_n mod p` for even `n <= p-3`.
    pub fn euler(&self, n: u64) -> Result<u64, ArithError> {
        if n % 2 == 1 || n + 3 > self.p {
            return Err(ArithError::IndexOutOfRange { index: n, limit: self.p - 3 });
        }
        Ok(self.euler[(n / 2) as usize])
    }

    fn frac(&self, num: i64, den: i64) -> Result<u64, ArithError> {
        let inv = inv_mod(den as i128, self.p)?;
        Ok(mul_mod(reduce_signed(num as i128, self.p), inv, self.p))
    }

    /// `B_n(num/den) mod p` for `n <= p-2`.
    pub fn bernoulli_poly(&self, n: u64, num: i64, den: i64) -> Result<u64, ArithError> {
        if n + 2 > self.p {
            return Err(ArithError::IndexOutOfRange { index: n, limit: self.p - 2 });
        }
        let x = self.frac(num, den)?;
        let p = self.p;
        // Horner over x with binomials C(n, k) B_k attached to x^(n-k)
        let binom = binomial_row(n, p);
        let mut acc = 0;
        for k in 0..=n {
            let term = mul_mod(binom[k as usize], self.bernoulli(k)?, p);
            acc = (mul_mod(acc, x, p) + term) % p;
        }
        Ok(acc)
    }

    /// `B_n(x) - B_n(y) mod p` for `n <= p-1`; the constant `B_n` cancels.
    pub fn bernoulli_poly_diff(&self, n: u64, x: (i64, i64), y: (i64, i64)) -> Result<u64, ArithError> {
        if n + 1 > self.p {
            return Err(ArithError::IndexOutOfRange { index: n, limit: self.p - 1 });
        }
        let p = self.p;
        let (x, y) = (self.frac(x.0, x.1)?, self.frac(y.0, y.1)?);
        let binom = binomial_row(n, p);
        let (mut ax, mut ay) = (0, 0);
        for k in 0..n {
            let term = mul_mod(binom[k as usize], self.bernoulli(k)?, p);
            ax = (mul_mod(ax, x, p) + term) % p;
            ay = (mul_mod(ay, y, p) + term) % p;
        }
        // the loop built sum_{k<n} c_k x^(n-1-k); one more factor of x each
        Ok((mul_mod(ax, x, p) + p - mul_mod(ay, y, p)) % p)
    }
}

/// `C(n, k) mod p` for `k = 0..=n` (Pascal row, exact for any `n`).
fn binomial_row(n: u64, p: u64) -> Vec<u64> {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(1);
        for w in row.windows(2) {
            next.push((w[0] + w[1]) % p);
        }
        next.push(1);
        row = next;
    }
    row
}

fn bernoulli_table(p: u64) -> Vec<u64> {
    let top = (p - 2) as usize;
    let mut b = vec![0u64; top + 1];
    b[0] = 1;
    // row holds C(m+1, j) mod p
    let mut row = vec![1u64, 1];
    for m in 1..=top {
        let mut next = vec![1u64; m + 2];
        for j in 1..=m {
            next[j] = (row[j - 1] + row[j]) % p;
        }
        row = next;
        if m > 1 && m % 2 == 1 {
            continue;
        }
        let mut s = 0u64;
        for j in 0..m {
            if j > 1 && j % 2 == 1 {
                continue;
            }
            s = (s + mul_mod(row[j], b[j], p)) % p;
        }
        let inv = inv_mod((m + 1) as i128, p).expect("m + 1 < p");
        b[m] = mul_mod(p - s, inv, p) % p;
    }
    b
}

fn euler_table(p: u64) -> Vec<u64> {
    let half = ((p - 3) / 2) as usize;
    let mut e = vec![0u64; half + 1];
    e[0] = 1;
    let mut row = vec![1u64];
    for n in 1..=(2 * half) {
        let mut next = vec![1u64; n + 1];
        for j in 1..n {
            next[j] = (row[j - 1] + row[j]) % p;
        }
        row = next;
        if n % 2 == 1 {
            continue;
        }
        let mut s = 0u64;
        for j in 0..n / 2 {
            s = (s + mul_mod(row[2 * j], e[j], p)) % p;
        }
        e[n / 2] = (p - s) % p;
    }
    e
}

/// `B_m mod p`; see [`SpecialConstants::bernoulli`].
pub fn bernoulli_mod(m: u64, p: u64) -> Result<u64, ArithError> {
    if m > 1 && m % 2 == 1 {
        return Ok(0);
    }
    SpecialConstants::new(p)?.bernoulli(m)
}

/// `E_n mod p`; see [`SpecialConstants::euler`].
pub fn euler_mod(n: u64, p: u64) -> Result<u64, ArithError> {
    SpecialConstants::new(p)?.euler(n)
}

/// `B_n(num/den) mod p`.
pub fn bernoulli_poly_mod(n: u64, num: i64, den: i64, p: u64) -> Result<u64, ArithError> {
    SpecialConstants::new(p)?.bernoulli_poly(n, num, den)
}
