//! Polynomial congruences in `t` for sums weighted by `1/C(2k,k)` or `C(2k,k)`,
//! against Lucas polynomials at `x = 2 - t` (and `x = y = t`). Coefficients are
//! `p`-adic, so the terms with `p | C(2k,k)` carry negative valuation until the
//! leading factor `p` restores integrality.

use super::{case, CaseDescriptor, Comparison, CongruenceError, Env, Family, Kind};
use crate::arith::PadicApprox;
use crate::lucaspoly::{lucas_seq, LucasKind};
use crate::rings::DensePoly;
use crate::special::harmonic_prefix;

type TPoly = DensePoly<PadicApprox>;

pub(super) fn cases() -> Vec<CaseDescriptor> {
    use Family::Main;
    use Kind::{Numeric as N, PolynomialInT as T};
    let first = "reciprocal central binomial sums against u_k(2-t), v_k(2-t)";
    let second = "harmonic reformulation with central binomials in the numerator";
    let last = "central binomial sums against u_p(t,t), v_p(t,t)";
    vec![
        case("MAIN-CC1", Main, T, 3, 2, 3, first, None, cc1, 0),
        case("MAIN-CC2", Main, T, 3, 2, 3, first, None, cc2, 0),
        case("MAIN-CC3", Main, T, 1, 2, 3, first, None, cc3, 0),
        case("MAIN-CC4", Main, T, 1, 2, 3, first, None, cc4, 0),
        case("MAIN-D3", Main, T, 2, 3, 3, "weight three reciprocal sum", None, d3, 0),
        case("MAIN-CC5", Main, T, 1, 2, 3, second, None, cc5, 0),
        case("MAIN-CC6", Main, T, 1, 2, 3, second, None, cc6, 0),
        case(
            "MAIN-SWITCH",
            Main,
            N,
            1,
            2,
            3,
            "denominator to numerator switch for central binomials",
            Some("checked for every 1 <= k <= p-1"),
            switch,
            0,
        ),
        case("MAIN-CC7", Main, T, 3, 2, 3, last, None, cc7, 0),
        case("MAIN-CC8", Main, T, 2, 2, 3, last, None, cc8, 0),
        case("MAIN-CC9", Main, T, 1, 3, 3, last, None, cc9, 0),
    ]
}

struct Main<'a> {
    env: &'a Env,
    p: usize,
    central: Vec<PadicApprox>,
}

impl<'a> Main<'a> {
    fn new(env: &'a Env) -> Self {
        let p = env.p as usize;
        Main { env, p, central: env.central_binomials(p) }
    }

    fn c(&self, n: i64) -> PadicApprox {
        self.env.int(n)
    }

    fn t_pow(&self, k: usize) -> TPoly {
        TPoly::monomial(self.c(1), k)
    }

    fn constant(&self, n: i64) -> TPoly {
        TPoly::constant(self.c(n))
    }

    /// `w_0..=w_p` at `x = 2 - t, y = 1`.
    fn at_two_minus_t(&self, kind: LucasKind) -> Vec<TPoly> {
        let x = TPoly::new(self.env.ctx, vec![self.c(2), self.c(-1)]);
        lucas_seq(kind, self.p, &x, &self.constant(1))
    }

    /// `w_0..=w_p` at `x = y = t`.
    fn at_t_t(&self, kind: LucasKind) -> Vec<TPoly> {
        let t = self.t_pow(1);
        lucas_seq(kind, self.p, &t, &t)
    }

    /// `sum_{k=1}^{p-1} w_k / k^d`.
    fn weighted(&self, w: &[TPoly], d: u32) -> TPoly {
        let mut acc = TPoly::zero(self.env.ctx);
        for (k, wk) in w.iter().enumerate().take(self.p).skip(1) {
            let inv = self.c(k as i64).pow(-(d as i32)).expect("k is a unit");
            acc = acc.add(&wk.scale(&inv));
        }
        acc
    }

    /// `sum_{k=1}^{p-1} coef(k) t^k`.
    fn series(&self, coef: impl Fn(usize) -> PadicApprox) -> TPoly {
        let mut cs = vec![self.c(0); self.p];
        for (k, slot) in cs.iter_mut().enumerate().skip(1) {
            *slot = coef(k);
        }
        TPoly::new(self.env.ctx, cs)
    }

    /// `p / (k^d C(2k,k))`.
    fn reciprocal(&self, k: usize, d: u32) -> PadicApprox {
        let den = self.c(k as i64).pow(d as i32).expect("k is a unit").mul(&self.central[k]);
        self.env.p_pow(1).div(&den).expect("nonzero")
    }

    fn reversed_series(&self, coef: impl Fn(usize) -> PadicApprox) -> TPoly {
        let mut cs = vec![self.c(0); self.p + 1];
        for k in 1..self.p {
            cs[self.p - k] = coef(k);
        }
        TPoly::new(self.env.ctx, cs)
    }

    fn harmonic2(&self) -> Vec<PadicApprox> {
        harmonic_prefix(&self.env.ctx, self.p - 1, 2).expect("indices below p are units")
    }
}

fn div_p(f: &TPoly, e: i32) -> TPoly {
    f.map(*f.ctx(), |c| c.shift(-e))
}

/// Rejects a left-hand side with a coefficient of negative valuation.
fn integral(label: &str, f: &TPoly) -> Result<(), CongruenceError> {
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.valuation().is_some_and(|v| v < 0) {
            return Err(CongruenceError::NonIntegralLhs { label: label.to_string(), index: i });
        }
    }
    Ok(())
}

fn one(label: &str, j: u32, lhs: TPoly, rhs: TPoly) -> Result<Vec<Comparison>, CongruenceError> {
    integral(label, &lhs)?;
    Ok(vec![Comparison::new(label, j, lhs, rhs)])
}

fn cc1(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let m = Main::new(env);
    let lhs = m.series(|k| m.reciprocal(k, 1));
    let us = m.at_two_minus_t(LucasKind::U);
    let t = m.t_pow(1);
    let head = t.mul(&us[m.p]).sub(&m.t_pow(m.p)).scale(&env.frac(1, 2));
    let rhs = head.add(&t.mul(&m.weighted(&us, 2)).scale(&env.p_pow(2)));
    one("CC1", 3, lhs, rhs)
}

fn cc2(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let m = Main::new(env);
    let lhs = m.series(|k| m.reciprocal(k, 2));
    let vs = m.at_two_minus_t(LucasKind::V);
    let top = m.constant(2).sub(&vs[m.p]).sub(&m.t_pow(m.p));
    let rhs = div_p(&top, 1).scale(&env.frac(1, 2)).sub(&m.weighted(&vs, 3).scale(&env.p_pow(2)));
    one("CC2", 3, lhs, rhs)
}

fn cc3(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let m = Main::new(env);
    let h = m.harmonic2();
    let lhs = m.series(|k| h[k - 1].mul(&m.reciprocal(k, 1)));
    let us = m.at_two_minus_t(LucasKind::U);
    let rhs = m.t_pow(1).mul(&m.weighted(&us, 2));
    one("CC3", 1, lhs, rhs)
}

fn cc4(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let m = Main::new(env);
    let h = m.harmonic2();
    let lhs = m.series(|k| h[k - 1].mul(&m.reciprocal(k, 2)));
    let vs = m.at_two_minus_t(LucasKind::V);
    one("CC4", 1, lhs, m.weighted(&vs, 3).neg())
}

fn d3(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let m = Main::new(env);
    let lhs = m.series(|k| m.reciprocal(k, 3));
    let vs = m.at_two_minus_t(LucasKind::V);
    let inv_c = m.central[m.p].inv()?;
    let top = m.constant(1).sub(&vs[m.p].add(&m.t_pow(m.p)).scale(&inv_c));
    let rhs = div_p(&top, 2).sub(&div_p(&m.weighted(&vs, 1), 1));
    one("D3", 2, lhs, rhs)
}

fn cc5(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let m = Main::new(env);
    let h = m.harmonic2();
    let lhs = m.reversed_series(|k| h[k].mul(&m.central[k]));
    let us = m.at_two_minus_t(LucasKind::U);
    let rhs = m.t_pow(1).mul(&m.weighted(&us, 2)).scale_i64(-2);
    one("CC5", 1, lhs, rhs)
}

fn cc6(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let m = Main::new(env);
    let h = m.harmonic2();
    let lhs = m.reversed_series(|k| h[k].mul(&m.central[k]).div(&m.c(k as i64)).expect("unit"));
    let vs = m.at_two_minus_t(LucasKind::V);
    one("CC6", 1, lhs, m.weighted(&vs, 3).scale_i64(-2))
}

fn switch(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let m = Main::new(env);
    let mut out = Vec::with_capacity(m.p - 1);
    for k in 1..m.p {
        let lhs = m.reciprocal(k, 1).mul(&m.c(2));
        if lhs.valuation().is_some_and(|v| v < 0) {
            return Err(CongruenceError::NonIntegralLhs { label: format!("k={k}"), index: 0 });
        }
        out.push(Comparison::new(format!("k={k}"), 1, lhs, m.central[m.p - k]));
    }
    Ok(out)
}

fn cc7(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let m = Main::new(env);
    let mut cs = vec![m.c(0); m.p];
    for k in 0..m.p {
        cs[m.p - 1 - k] = m.central[k];
    }
    let lhs = TPoly::new(env.ctx, cs);
    let us = m.at_two_minus_t(LucasKind::U);
    let utt = m.at_t_t(LucasKind::U);
    let tail = m.weighted(&us, 2).add(&m.weighted(&utt, 2)).scale(&env.p_pow(2)).scale_i64(2);
    let rhs = utt[m.p].scale_i64(2).sub(&us[m.p]).sub(&tail);
    one("CC7", 3, lhs, rhs)
}

fn cc8(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let m = Main::new(env);
    let lhs = m.reversed_series(|k| m.central[k].div(&m.c(k as i64)).expect("unit"));
    let vs = m.at_two_minus_t(LucasKind::V);
    let vtt = m.at_t_t(LucasKind::V);
    let top = m.t_pow(m.p).scale_i64(3).add(&m.constant(2)).sub(&vs[m.p]).sub(&vtt[m.p].scale_i64(4));
    one("CC8", 2, lhs, div_p(&top, 1))
}

fn cc9(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let m = Main::new(env);
    let lhs = m.reversed_series(|k| m.central[k].div(&m.c(2 * (k * k) as i64)).expect("unit"));
    let vs = m.at_two_minus_t(LucasKind::V);
    let vtt = m.at_t_t(LucasKind::V);
    let top = vs[m.p].add(&vtt[m.p].scale_i64(2)).sub(&m.t_pow(m.p)).sub(&m.constant(2));
    let rhs = div_p(&top, 2).add(&m.weighted(&vs, 2));
    one("CC9", 1, lhs, rhs)
}
