//! Exact polynomial identities in `t` over the rationals: central binomial sums
//! against Lucas sequences at `t - 2`, integration lemmas, and a few structural
//! facts (log powers, group invariance, derivative of `v_n`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::binomial;
use crate::lucaspoly::{lucas_seq, LucasKind};
use crate::mobius::{act, is_invariant, MobiusElement};
use crate::rings::{series_pow_log, series_pow_log_by_products, DensePoly};

type QPoly = DensePoly<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity {0}")]
    UnknownId(String),
    #[error("{id} needs n >= 1")]
    BadN { id: String },
    #[error("{id} needs s >= 1")]
    BadS { id: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCase {
    pub id: &'static str,
    pub anchor: &'static str,
    pub uses_s: bool,
}

const REGISTRY: &[IdentityCase] = &[
    IdentityCase {
        id: "ID-I3",
        anchor: "reciprocal central binomial sum, weight 1, vs u_k(t-2)/k",
        uses_s: false,
    },
    IdentityCase { id: "ID-I4", anchor: "weight 2 sum vs v_k(t-2)/k^2", uses_s: false },
    IdentityCase { id: "ID-I4B", anchor: "weight 3 sum vs v_k(t-2)/k^3 with double sum", uses_s: false },
    IdentityCase { id: "ID-I5", anchor: "(t-4) times weight 0 sum plus twice weight 1 sum", uses_s: false },
    IdentityCase { id: "ID-I6", anchor: "harmonic-weighted analogue of ID-I5", uses_s: true },
    IdentityCase { id: "ID-S1", anchor: "primitive of u_n(t-2)", uses_s: false },
    IdentityCase { id: "ID-S2", anchor: "primitive of (v_n(t-2) - v_n(-2))/t", uses_s: false },
    IdentityCase {
        id: "ID-I1",
        anchor: "alternating sum with C(n,k)C(n+k-1,k-1) vs u_n(t-2)",
        uses_s: false,
    },
    IdentityCase { id: "ID-I2", anchor: "alternating sum with C(n,k)C(n+k-1,k) vs v_n(t-2)", uses_s: false },
    IdentityCase { id: "ID-I7", anchor: "central binomial partial sum vs u_k(t-2)", uses_s: false },
    IdentityCase { id: "ID-EQS1", anchor: "first integrated form of ID-I7", uses_s: false },
    IdentityCase { id: "ID-EQS2", anchor: "second integrated form of ID-I7", uses_s: false },
    IdentityCase { id: "ID-I8", anchor: "sum of C(2k,k)/k t^(n-k) vs v_j(t-2)", uses_s: false },
    IdentityCase {
        id: "ID-RE",
        anchor: "first-order recurrence of the central binomial transform",
        uses_s: true,
    },
    IdentityCase { id: "ID-LOGPOW", anchor: "log(1+x)^d/d! via falling factorials", uses_s: false },
    IdentityCase { id: "ID-GINV", anchor: "f + Sf + RSf is invariant when Rf = f", uses_s: false },
    IdentityCase { id: "ID-DTV", anchor: "d/dx v_n = n u_n", uses_s: false },
];

pub fn registry() -> &'static [IdentityCase] {
    REGISTRY
}

#[derive(Debug, Clone, PartialEq)]
pub enum IdentityOutcome {
    Pass,
    Fail { residual: QPoly },
}

impl IdentityOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, IdentityOutcome::Pass)
    }
}

fn q(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn frac(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn c(n: i64, k: i64) -> BigRational {
    q(binomial(n, k))
}

fn sign(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

fn tpow(k: usize) -> QPoly {
    QPoly::monomial(BigRational::one(), k)
}

fn constant(x: BigRational) -> QPoly {
    QPoly::constant(x)
}

fn zero() -> QPoly {
    QPoly::zero(())
}

fn harmonic(n: i64, s: u32) -> BigRational {
    (1..=n).fold(BigRational::zero(), |acc, r| acc + frac(1, r).pow(s as i32))
}

/// `u_k(t-2)` and `v_k(t-2)` for `k = 0..=n`.
struct Lucas {
    u: Vec<QPoly>,
    v: Vec<QPoly>,
}

impl Lucas {
    fn new(n: usize) -> Self {
        let x = QPoly::from_i64s((), &[-2, 1]);
        let one = QPoly::from_i64s((), &[1]);
        Lucas { u: lucas_seq(LucasKind::U, n, &x, &one), v: lucas_seq(LucasKind::V, n, &x, &one) }
    }

    /// `v_k(t-2) - 2(-1)^k`, which vanishes at `t = 0`.
    fn v0(&self, k: usize) -> QPoly {
        self.v[k].sub(&constant(q(2 * sign(k as i64))))
    }
}

fn compare(lhs: QPoly, rhs: QPoly) -> IdentityOutcome {
    let residual = lhs.sub(&rhs).trimmed();
    if residual.is_zero() {
        IdentityOutcome::Pass
    } else {
        IdentityOutcome::Fail { residual }
    }
}

fn first_failure(outcomes: impl IntoIterator<Item = IdentityOutcome>) -> IdentityOutcome {
    outcomes.into_iter().find(|o| !o.passed()).unwrap_or(IdentityOutcome::Pass)
}

/// `C(2n,n) sum_{k=1}^n t^(k - 1 + shift) / (k^w C(2k,k))`.
fn central_sum(n: i64, w: u32, shift: usize) -> QPoly {
    let mut acc = zero();
    for k in 1..=n {
        let coef = c(2 * n, n) / (q(k).pow(w as i32) * c(2 * k, k));
        acc = acc.add(&tpow(k as usize - 1 + shift).scale(&coef));
    }
    acc
}

fn id_i3(n: i64, l: &Lucas) -> IdentityOutcome {
    let lhs = central_sum(n, 1, 0);
    let mut rhs = zero();
    for k in 1..=n {
        rhs = rhs.add(&l.u[k as usize].scale(&(c(2 * n, n - k) / q(k))));
    }
    compare(lhs, rhs)
}

fn id_i4(n: i64, l: &Lucas) -> IdentityOutcome {
    let lhs = central_sum(n, 2, 1);
    let mut rhs = constant(c(2 * n, n) * harmonic(n, 2));
    for k in 1..=n {
        rhs = rhs.add(&l.v[k as usize].scale(&(c(2 * n, n - k) / q(k * k))));
    }
    compare(lhs, rhs)
}

fn id_i4b(n: i64, l: &Lucas) -> IdentityOutcome {
    let lhs = central_sum(n, 3, 1);
    let mut rhs = constant(c(2 * n, n) * harmonic(n, 3));
    for k in 1..=n {
        rhs = rhs.add(&l.v[k as usize].scale(&(c(2 * n, n - k) / q(k * k * k))));
        for j in 1..k {
            let coef = q(2 * sign(k - j)) * c(2 * n, n - k) / q(j * k * k);
            rhs = rhs.add(&l.v[j as usize].scale(&coef));
        }
    }
    compare(lhs, rhs)
}

/// `(t-4) sum t^(k-1) h_k / C(2k,k) + 2 sum t^(k-1) h_k / (k C(2k,k))`.
fn five_six_lhs(n: i64, h: impl Fn(i64) -> BigRational) -> QPoly {
    let mut a = zero();
    let mut b = zero();
    for k in 1..=n {
        let hk = h(k);
        a = a.add(&tpow(k as usize - 1).scale(&(hk.clone() / c(2 * k, k))));
        b = b.add(&tpow(k as usize - 1).scale(&(hk / (q(k) * c(2 * k, k)))));
    }
    QPoly::from_i64s((), &[-4, 1]).mul(&a).add(&b.scale_i64(2))
}

fn id_i5(n: i64) -> IdentityOutcome {
    let lhs = five_six_lhs(n, |_| BigRational::one());
    let rhs = tpow(n as usize).scale(&(BigRational::one() / c(2 * n, n))).sub(&constant(q(1)));
    compare(lhs, rhs)
}

fn id_i6(n: i64, s: u32) -> IdentityOutcome {
    let lhs = five_six_lhs(n, |k| harmonic(k - 1, s));
    let mut rhs = tpow(n as usize).scale(&(harmonic(n, s) / c(2 * n, n)));
    for k in 1..=n {
        rhs = rhs.sub(&tpow(k as usize).scale(&(BigRational::one() / (q(k).pow(s as i32) * c(2 * k, k)))));
    }
    compare(lhs, rhs)
}

fn id_s1(n: i64, l: &Lucas) -> IdentityOutcome {
    let lhs = l.u[n as usize].integrate().expect("rational coefficients");
    let rhs = l.v0(n as usize).scale(&frac(1, n));
    compare(lhs, rhs)
}

fn id_s2(n: i64, l: &Lucas) -> IdentityOutcome {
    let vv = l.v0(n as usize);
    debug_assert!(vv.coeff(0).is_zero());
    let quotient = QPoly::new((), vv.coeffs().iter().skip(1).cloned().collect());
    let lhs = quotient.integrate().expect("rational coefficients");
    let mut rhs = vv.scale(&frac(1, n));
    for k in 1..n {
        rhs = rhs.add(&l.v0(k as usize).scale(&frac(2 * sign(n - k), k)));
    }
    compare(lhs, rhs)
}

fn id_i1(n: i64, l: &Lucas) -> IdentityOutcome {
    let mut lhs = zero();
    for k in 1..=n {
        let coef = c(n, k) * c(n + k - 1, k - 1) * q(sign(k - 1)) / c(2 * k, k);
        lhs = lhs.add(&tpow(k as usize - 1).scale(&coef));
    }
    compare(lhs, l.u[n as usize].scale(&frac(sign(n - 1), 2)))
}

fn id_i2(n: i64, l: &Lucas) -> IdentityOutcome {
    let mut lhs = zero();
    for k in 0..=n {
        let coef = c(n, k) * c(n + k - 1, k) * q(sign(k)) / c(2 * k, k);
        lhs = lhs.add(&tpow(k as usize).scale(&coef));
    }
    compare(lhs, l.v[n as usize].scale(&frac(sign(n), 2)))
}

fn id_i7(n: i64, l: &Lucas) -> IdentityOutcome {
    let mut lhs = zero();
    for k in 0..n {
        lhs = lhs.add(&tpow((n - 1 - k) as usize).scale(&c(2 * k, k)));
    }
    let mut rhs = zero();
    for k in 1..=n {
        rhs = rhs.add(&l.u[k as usize].scale(&c(2 * n, n - k)));
    }
    compare(lhs, rhs)
}

fn id_eqs1(n: i64, l: &Lucas) -> IdentityOutcome {
    let mut lhs = zero();
    for k in 0..n {
        lhs = lhs.add(&tpow((n - k) as usize).scale(&(c(2 * k, k) / q(n - k))));
    }
    let mut rhs = zero();
    for k in 1..=n {
        rhs = rhs.add(&l.v0(k as usize).scale(&(c(2 * n, n - k) / q(k))));
    }
    compare(lhs, rhs)
}

fn id_eqs2(n: i64, l: &Lucas) -> IdentityOutcome {
    let mut lhs = zero();
    for k in 0..n {
        lhs = lhs.add(&tpow((n - k) as usize).scale(&(c(2 * k, k) / q((n - k) * (n - k)))));
    }
    let mut rhs = zero();
    for k in 1..=n {
        rhs = rhs.add(&l.v0(k as usize).scale(&(c(2 * n, n - k) / q(k * k))));
        for j in 1..k {
            let coef = q(2 * sign(k - j)) * c(2 * n, n - k) / q(j * k);
            rhs = rhs.add(&l.v0(j as usize).scale(&coef));
        }
    }
    compare(lhs, rhs)
}

fn id_i8(n: i64, l: &Lucas) -> IdentityOutcome {
    let mut lhs = zero();
    for k in 1..n {
        lhs = lhs.add(&tpow((n - k) as usize).scale(&(c(2 * k, k) / q(k))));
    }
    let mut rhs = zero();
    for d in 1..n {
        for k in 0..n - d {
            let coef = q(-2 * sign(d)) * c(2 * n, k) / q(d);
            rhs = rhs.add(&l.v[(n - d - k) as usize].scale(&coef));
        }
        rhs = rhs.add(&constant(q(-4 * sign(d)) * c(2 * n - 1, n - d - 1) / q(d)));
    }
    compare(lhs, rhs)
}

/// `Δ_m(x) = (m+1) x(m+1) - 2(2m+1) x(m)` applied to a polynomial-valued sequence.
fn delta(seq: &[QPoly], m: usize) -> QPoly {
    seq[m + 1].scale_i64(m as i64 + 1).sub(&seq[m].scale_i64(2 * (2 * m as i64 + 1)))
}

fn id_re(n: i64, s: Option<u32>) -> IdentityOutcome {
    let n = n as usize;
    let mut checks = Vec::new();
    let weights: Vec<Option<u32>> = match s {
        Some(s) => vec![None, Some(s)],
        None => vec![None],
    };
    for hs in weights {
        let h = |k: i64| hs.map_or(BigRational::one(), |s| harmonic(k, s));
        for d in 0..=3u32 {
            // a(m) = C(2m,m) sum_{k<=m} c(k)/C(2k,k), c(k) = t^(k-1) h(k-1) / k^d
            let seq: Vec<QPoly> = (0..=n + 1)
                .map(|m| {
                    let mut acc = zero();
                    for k in 1..=m as i64 {
                        let coef = c(2 * m as i64, m as i64) * h(k - 1) / (q(k).pow(d as i32) * c(2 * k, k));
                        acc = acc.add(&tpow(k as usize - 1).scale(&coef));
                    }
                    acc
                })
                .collect();
            for m in 0..=n {
                let rhs = tpow(m).scale(&(h(m as i64) / q(m as i64 + 1).pow(d as i32 - 1)));
                checks.push(compare(delta(&seq, m), rhs));
            }
        }
    }
    first_failure(checks)
}

fn id_logpow(n: i64) -> IdentityOutcome {
    let n = n as usize;
    first_failure((1..=5).map(|d| {
        let a = QPoly::new((), series_pow_log(d, n));
        let b = QPoly::new((), series_pow_log_by_products(d, n));
        compare(a, b)
    }))
}

/// A deterministic polynomial of degree `m` with small varied coefficients.
fn sample_poly(m: usize) -> QPoly {
    let cs: Vec<i64> = (0..=m as i64).map(|i| ((i * 7 + 3) % 11) - 5 + i % 3).collect();
    QPoly::from_i64s((), &cs)
}

fn id_ginv(n: i64) -> IdentityOutcome {
    let m = n as usize;
    let g = sample_poly(m);
    let f = g.add(&act(MobiusElement::R, &g, m).expect("degree m"));
    let sf = act(MobiusElement::S, &f, m).expect("degree m");
    let rsf = act(MobiusElement::RS, &f, m).expect("degree m");
    let h = f.add(&sf).add(&rsf).with_formal_degree(m).expect("degree m");
    if is_invariant(&h, m).expect("degree m") {
        IdentityOutcome::Pass
    } else {
        let images = MobiusElement::ALL.map(|t| act(t, &h, m).expect("degree m"));
        first_failure(images.into_iter().map(|img| compare(img, h.clone())))
    }
}

fn id_dtv(n: i64) -> IdentityOutcome {
    let x = QPoly::x(());
    let one = QPoly::from_i64s((), &[1]);
    let u = lucas_seq(LucasKind::U, n as usize, &x, &one).pop().expect("nonempty");
    let v = lucas_seq(LucasKind::V, n as usize, &x, &one).pop().expect("nonempty");
    compare(v.derivative(), u.scale_i64(n))
}

/// Checks identity `id` at size `n` (and `s` where the identity has one; `None`
/// means `s = 1` for ID-I6 and no harmonic weight for ID-RE).
pub fn verify_identity(id: &str, n: usize, s: Option<u32>) -> Result<IdentityOutcome, IdentityError> {
    let case =
        REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| IdentityError::UnknownId(id.to_string()))?;
    if n == 0 {
        return Err(IdentityError::BadN { id: case.id.to_string() });
    }
    if s == Some(0) {
        return Err(IdentityError::BadS { id: case.id.to_string() });
    }
    let n = n as i64;
    let needs_lucas = !matches!(case.id, "ID-I5" | "ID-I6" | "ID-RE" | "ID-LOGPOW" | "ID-GINV" | "ID-DTV");
    let l = if needs_lucas { Some(Lucas::new(n as usize)) } else { None };
    let l = || l.as_ref().expect("built above");
    Ok(match case.id {
        "ID-I3" => id_i3(n, l()),
        "ID-I4" => id_i4(n, l()),
        "ID-I4B" => id_i4b(n, l()),
        "ID-I5" => id_i5(n),
        "ID-I6" => id_i6(n, s.unwrap_or(1)),
        "ID-S1" => id_s1(n, l()),
        "ID-S2" => id_s2(n, l()),
        "ID-I1" => id_i1(n, l()),
        "ID-I2" => id_i2(n, l()),
        "ID-I7" => id_i7(n, l()),
        "ID-EQS1" => id_eqs1(n, l()),
        "ID-EQS2" => id_eqs2(n, l()),
        "ID-I8" => id_i8(n, l()),
        "ID-RE" => id_re(n, s),
        "ID-LOGPOW" => id_logpow(n),
        "ID-GINV" => id_ginv(n),
        "ID-DTV" => id_dtv(n),
        _ => unreachable!("registry and dispatch agree"),
    })
}
