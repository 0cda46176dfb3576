//! Values of finite polylogarithms at special points, in `Z_p` or in a
//! quadratic extension of it.

use super::{case, CaseDescriptor, Comparison, CongruenceError, Env, Family, Kind};
use crate::arith::PadicApprox;
use crate::polylog::finite_polylog;
use crate::rings::{InverseTable, QuadElem, QuadExt, Ring};
use crate::special::harmonic;

type Quad = QuadElem<PadicApprox>;

pub(super) fn cases() -> Vec<CaseDescriptor> {
    use Family::Sv;
    use Kind::{Numeric as N, QuadNumeric as Q};
    let glaisher = "harmonic numbers H_{p-1}(d) via Bernoulli numbers";
    let minus_one = "values at -1";
    vec![
        case("SV-L1-ODD", Sv, N, 3, 2, 3, glaisher, Some("odd d <= 3 with p > d + 2, modulo p^3"), l1_odd, 0),
        case(
            "SV-L1-EVEN",
            Sv,
            N,
            2,
            2,
            3,
            glaisher,
            Some("even d <= 4 with p > d + 2, modulo p^2"),
            l1_even,
            0,
        ),
        case("SV-LM1-1", Sv, N, 3, 2, 3, minus_one, None, lm1_1, 0),
        case("SV-LM1-2", Sv, N, 2, 2, 3, minus_one, None, lm1_d, 2),
        case("SV-LM1-3", Sv, N, 1, 2, 3, minus_one, None, lm1_d, 3),
        case(
            "SV-2SET",
            Sv,
            N,
            3,
            2,
            3,
            "values at 2 and 1/2",
            Some("d = 1, 2, 3 modulo p^3, p^2, p respectively"),
            two_set,
            0,
        ),
        case("SV-I2", Sv, Q, 1, 2, 3, "dilogarithm at the fourth roots of unity", None, gauss_2, 0),
        case("SV-I3", Sv, Q, 1, 2, 3, "trilogarithm at the fourth roots of unity", None, gauss_3, 0),
        case(
            "SV-W2",
            Sv,
            Q,
            1,
            2,
            3,
            "dilogarithm at the sixth roots of unity",
            Some("i√3 is taken as 2ω - 1 in Z_p[ω], ω² = ω - 1, for every p"),
            omega_2,
            0,
        ),
        case(
            "SV-W3",
            Sv,
            Q,
            1,
            2,
            3,
            "trilogarithm at the sixth roots of unity",
            Some("i√3 is taken as 2ω - 1 in Z_p[ω], ω² = ω - 1, for every p"),
            omega_3,
            0,
        ),
        case("SV-THMI", Sv, Q, 1, 2, 3, "dilogarithm at 1 ± i and (1 ± i)/2", None, thm_i, 0),
        case(
            "SV-THMW",
            Sv,
            Q,
            1,
            2,
            3,
            "dilogarithm at 1 + ω^(±1) and (1 + ω^(±1))/3",
            Some("i√3 is taken as 2ω - 1 in Z_p[ω], ω² = ω - 1, for every p"),
            thm_w,
            0,
        ),
        case(
            "SV-THMPHI",
            Sv,
            Q,
            1,
            2,
            5,
            "dilogarithm and trilogarithm on the golden-ratio orbit",
            Some("√5 is taken as 2φ - 1; the conjugate statements use φ -> 1 - φ"),
            thm_phi,
            0,
        ),
        case(
            "SV-RESCLASS",
            Sv,
            N,
            1,
            2,
            3,
            "harmonic sums over a residue class via Bernoulli polynomials",
            Some("m in {2, 3, 4, 6}, d <= 3 with p > d + 3"),
            resclass,
            0,
        ),
    ]
}

fn polylog_at(env: &Env, d: u32, x: &PadicApprox) -> PadicApprox {
    let inv = InverseTable::new(&env.ctx, env.p);
    finite_polylog(d, x, &inv)
}

fn l1_odd(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let p = env.p;
    let mut out = Vec::new();
    for d in [1u32, 3] {
        if p <= d as u64 + 2 {
            continue;
        }
        let lhs = harmonic(p - 1, d, env.ctx);
        let c = env.frac(-((d * (d + 1)) as i64), 2 * (d as i64 + 2));
        let rhs = c.mul(&env.p_pow(2)).mul(&env.bernoulli(p - d as u64 - 2)?);
        out.push(Comparison::new(format!("d={d}"), 3, lhs, rhs));
    }
    Ok(out)
}

fn l1_even(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let p = env.p;
    let mut out = Vec::new();
    for d in [2u32, 4] {
        if p <= d as u64 + 2 {
            continue;
        }
        let lhs = harmonic(p - 1, d, env.ctx);
        let rhs = env.frac(d as i64, d as i64 + 1).mul(&env.p_pow(1)).mul(&env.bernoulli(p - d as u64 - 1)?);
        out.push(Comparison::new(format!("d={d}"), 2, lhs, rhs));
    }
    Ok(out)
}

fn lm1_1(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let q = env.fermat_quotient(2)?;
    let q2 = q.mul(&q);
    let q3 = q2.mul(&q);
    let b = env.bernoulli(env.p - 3)?;
    let tail = env.frac(2, 3).mul(&q3).add(&env.frac(1, 4).mul(&b));
    let rhs = q.mul(&env.int(-2)).add(&env.p_pow(1).mul(&q2)).sub(&env.p_pow(2).mul(&tail));
    let lhs = polylog_at(env, 1, &env.int(-1));
    Ok(vec![Comparison::new("d=1", 3, lhs, rhs)])
}

fn lm1_d(env: &Env, d: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let b = env.bernoulli(env.p - 3)?;
    let lhs = polylog_at(env, d, &env.int(-1));
    let (rhs, j) = match d {
        2 => (env.frac(1, 2).mul(&env.p_pow(1)).mul(&b), 2),
        3 => (env.frac(-1, 2).mul(&b), 1),
        _ => unreachable!("registered for d = 2, 3"),
    };
    Ok(vec![Comparison::new(format!("d={d}"), j, lhs, rhs)])
}

fn two_set(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let q = env.fermat_quotient(2)?;
    let q2 = q.mul(&q);
    let q3 = q2.mul(&q);
    let b = env.bernoulli(env.p - 3)?;
    let p1 = env.p_pow(1);
    let p2 = env.p_pow(2);
    let two = env.int(2);
    let half = env.frac(1, 2);
    let f = |num: i64, den: i64| env.frac(num, den);
    let rhs_2_1 = q.mul(&env.int(-2)).sub(&f(7, 12).mul(&p2).mul(&b));
    let rhs_2_2 = q2.neg().add(&p1.mul(&f(2, 3).mul(&q3).add(&f(7, 6).mul(&b))));
    let rhs_2_3 = q3.mul(&f(-1, 3)).sub(&f(7, 24).mul(&b));
    let rhs_h_1 = q.sub(&p1.mul(&q2).mul(&half)).add(&p2.mul(&q3.mul(&f(1, 3)).sub(&f(7, 48).mul(&b))));
    let rhs_h_2 = q2.mul(&f(-1, 2)).add(&p1.mul(&q3.mul(&half).add(&f(7, 24).mul(&b))));
    let rhs_h_3 = q3.mul(&f(1, 6)).add(&f(7, 48).mul(&b));
    Ok(vec![
        Comparison::new("d=1 at 2", 3, polylog_at(env, 1, &two), rhs_2_1),
        Comparison::new("d=2 at 2", 2, polylog_at(env, 2, &two), rhs_2_2),
        Comparison::new("d=3 at 2", 1, polylog_at(env, 3, &two), rhs_2_3),
        Comparison::new("d=1 at 1/2", 3, polylog_at(env, 1, &half), rhs_h_1),
        Comparison::new("d=2 at 1/2", 2, polylog_at(env, 2, &half), rhs_h_2),
        Comparison::new("d=3 at 1/2", 1, polylog_at(env, 3, &half), rhs_h_3),
    ])
}

/// Arithmetic helpers inside one quadratic extension.
struct QuadEnv<'a> {
    env: &'a Env,
    ext: QuadExt<PadicApprox>,
    inv: InverseTable<Quad>,
}

impl<'a> QuadEnv<'a> {
    fn new(env: &'a Env, ext: QuadExt<PadicApprox>) -> Self {
        let inv = InverseTable::new(&ext, env.p);
        QuadEnv { env, ext, inv }
    }

    fn c(&self, x: PadicApprox) -> Quad {
        self.ext.embed(x)
    }

    fn int(&self, n: i64) -> Quad {
        self.c(self.env.int(n))
    }

    fn frac(&self, num: i64, den: i64) -> Quad {
        self.c(self.env.frac(num, den))
    }

    fn alpha(&self) -> Quad {
        self.ext.alpha()
    }

    fn li(&self, d: u32, x: &Quad) -> Quad {
        finite_polylog(d, x, &self.inv)
    }

    /// `£_d(x) ≡ rhs` and the conjugate statement `£_d(x̄) ≡ conj(rhs)`.
    fn pair(&self, out: &mut Vec<Comparison>, label: &str, d: u32, x: Quad, rhs: Quad) {
        let conj_x = x.conj();
        let conj_rhs = rhs.conj();
        out.push(Comparison::new(label, 1, self.li(d, &x), rhs));
        out.push(Comparison::new(format!("{label}, conjugate"), 1, self.li(d, &conj_x), conj_rhs));
    }
}

fn gauss_2(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = QuadEnv::new(env, QuadExt::gaussian(&env.ctx));
    let i = g.alpha();
    let e = g.c(env.euler(env.p - 3)?);
    let rhs = g.frac(1, 2).mul(&g.int(env.leg_minus1()).add(&i)).mul(&e);
    let mut out = Vec::new();
    g.pair(&mut out, "d=2 at i", 2, i, rhs);
    Ok(out)
}

fn gauss_3(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = QuadEnv::new(env, QuadExt::gaussian(&env.ctx));
    let i = g.alpha();
    let b = g.c(env.bernoulli(env.p - 3)?);
    let rhs = g.frac(1, 32).mul(&g.int(-1).add(&i.scale_i64(env.leg_minus1()))).mul(&b);
    let mut out = Vec::new();
    g.pair(&mut out, "d=3 at i", 3, i, rhs);
    Ok(out)
}

fn thm_i(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = QuadEnv::new(env, QuadExt::gaussian(&env.ctx));
    let i = g.alpha();
    let l1 = env.leg_minus1();
    let q = g.c(env.fermat_quotient(2)?);
    let q2 = q.mul(&q);
    let e = g.c(env.euler(env.p - 3)?);
    let one_plus_i = g.int(1).add(&i);
    let rhs_a = q2.mul(&g.frac(-1, 8)).mul(&g.int(1).add(&i.scale_i64(l1))).add(&g.frac(l1, 2).mul(&e));
    let rhs_b = q2.mul(&g.frac(-1, 8)).add(&g.frac(1, 4).mul(&g.int(l1).add(&i)).mul(&e));
    let mut out = Vec::new();
    g.pair(&mut out, "at 1+i", 2, one_plus_i.clone(), rhs_a);
    g.pair(&mut out, "at (1+i)/2", 2, one_plus_i.mul(&g.frac(1, 2)), rhs_b);
    Ok(out)
}

/// `(i√3, (p/3), B_{p-2}(1/3))` in the ω-ring.
fn omega_data(g: &QuadEnv) -> Result<(Quad, i64, Quad), CongruenceError> {
    let s3 = g.ext.sqrt_disc();
    let b13 = g.c(g.env.bernoulli_poly(g.env.p - 2, 1, 3)?);
    Ok((s3, g.env.leg3(), b13))
}

fn omega_2(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = QuadEnv::new(env, QuadExt::omega6(&env.ctx));
    let w = g.alpha();
    let (s3, l3, b13) = omega_data(&g)?;
    let rhs_a = g.frac(1, 8).mul(&g.int(l3).add(&s3.mul(&g.frac(1, 3)))).mul(&b13);
    let rhs_b = g.frac(1, 12).mul(&g.int(l3).sub(&s3)).mul(&b13);
    let mut out = Vec::new();
    g.pair(&mut out, "d=2 at ω", 2, w.clone(), rhs_a);
    g.pair(&mut out, "d=2 at -ω", 2, w.neg(), rhs_b);
    Ok(out)
}

fn omega_3(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = QuadEnv::new(env, QuadExt::omega6(&env.ctx));
    let w = g.alpha();
    let (s3, l3, _) = omega_data(&g)?;
    let b = g.c(env.bernoulli(env.p - 3)?);
    let rhs_a = g.frac(1, 18).mul(&g.int(1).sub(&s3.scale_i64(l3))).mul(&b);
    let rhs_b = g.frac(2, 9).mul(&g.int(-1).sub(&s3.mul(&g.frac(l3, 3)))).mul(&b);
    let mut out = Vec::new();
    g.pair(&mut out, "d=3 at ω", 3, w.clone(), rhs_a);
    g.pair(&mut out, "d=3 at -ω", 3, w.neg(), rhs_b);
    Ok(out)
}

fn thm_w(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = QuadEnv::new(env, QuadExt::omega6(&env.ctx));
    let w = g.alpha();
    let (s3, l3, b13) = omega_data(&g)?;
    let q = g.c(env.fermat_quotient(3)?);
    let q2 = q.mul(&q);
    let one_plus_w = g.int(1).add(&w);
    let rhs_a = q2
        .mul(&g.frac(-1, 16))
        .mul(&g.int(3).add(&s3.scale_i64(l3)))
        .add(&g.frac(1, 36).mul(&g.int(3 * l3).sub(&s3)).mul(&b13));
    let rhs_b = q2.mul(&g.frac(-1, 8)).add(&g.frac(1, 36).mul(&g.int(l3).add(&s3)).mul(&b13));
    let mut out = Vec::new();
    g.pair(&mut out, "at 1+ω", 2, one_plus_w.clone(), rhs_a);
    g.pair(&mut out, "at (1+ω)/3", 2, one_plus_w.mul(&g.frac(1, 3)), rhs_b);
    Ok(out)
}

fn thm_phi(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = QuadEnv::new(env, QuadExt::golden(&env.ctx));
    let phi = g.alpha();
    let s5 = g.ext.sqrt_disc();
    let l5 = env.leg5();
    let ql = g.c(env.lucas_quotient());
    let ql2 = ql.mul(&ql);
    let ql3 = ql2.mul(&ql);
    let b = g.c(env.bernoulli(env.p - 3)?);
    // 1 + (√5/5)(p/5)
    let mix = g.int(1).add(&s5.mul(&g.frac(l5, 5)));
    let rhs_phi = s5.mul(&g.frac(-l5, 10)).mul(&ql2);
    let rhs_phi2 = g.frac(-1, 2).mul(&mix).mul(&ql2);
    let rhs_mphi = g.frac(-1, 4).mul(&mix).mul(&ql2);
    let rhs_tri = g.frac(-2, 15).mul(&g.int(1).add(&s5.scale_i64(l5))).mul(&ql3.mul(&g.frac(1, 2)).add(&b));
    let phi2 = phi.mul(&phi);
    let mut out = Vec::new();
    g.pair(&mut out, "d=2 at φ", 2, phi.clone(), rhs_phi);
    g.pair(&mut out, "d=2 at φ²", 2, phi2.clone(), rhs_phi2);
    g.pair(&mut out, "d=2 at -φ", 2, phi.neg(), rhs_mphi);
    g.pair(&mut out, "d=3 at φ²", 3, phi2, rhs_tri);
    Ok(out)
}

fn resclass(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let p = env.p;
    let consts = env.constants()?;
    let mut out = Vec::new();
    for m in [2u64, 3, 4, 6] {
        for d in 1..=3u32 {
            if p <= d as u64 + 3 {
                continue;
            }
            for r in 0..m {
                let mut lhs = env.int(0);
                for k in (1..p).filter(|k| k % m == r) {
                    lhs = lhs.add(&env.int(k as i64).pow(-(d as i32))?);
                }
                let shifted = (r as i64 - p as i64).rem_euclid(m as i64);
                let diff =
                    consts.bernoulli_poly_diff(p - d as u64, (r as i64, m as i64), (shifted, m as i64))?;
                let diff = PadicApprox::from_residue(env.ctx, crate::arith::Residue::from_u64(diff, p));
                let rhs = env.frac(1, d as i64 * (m as i64).pow(d)).mul(&diff);
                out.push(Comparison::new(format!("m={m} d={d} r={r}"), 1, lhs, rhs));
            }
        }
    }
    Ok(out)
}
