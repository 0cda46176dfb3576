//! Polynomial congruences in `x`, compared coefficient-wise in `Z/p^j`.

use super::{case, CaseDescriptor, Comparison, CongruenceError, Env, Family, Kind};
use crate::arith::Residue;
use crate::mobius::x_pow_at_one_minus_inv;
use crate::polylog::{finite_polylog, polylog_poly, qp_poly};
use crate::rings::{AffineMap, DensePoly, InverseTable, Ring};
use crate::special::mhs;

type Poly = DensePoly<Residue>;

const X: Kind = Kind::PolynomialInX;

pub(super) fn cases() -> Vec<CaseDescriptor> {
    use Family::Gen;
    let mut v = Vec::new();
    const C1: [&str; 4] = ["GEN-C1-1", "GEN-C1-2", "GEN-C1-3", "GEN-C1-4"];
    for (i, id) in C1.into_iter().enumerate() {
        v.push(case(id, Gen, X, 1, 0, 2, "inversion relation", None, c1, i as u32 + 1));
    }
    const C1B: [&str; 3] = ["GEN-C1B-1", "GEN-C1B-2", "GEN-C1B-3"];
    for (i, id) in C1B.into_iter().enumerate() {
        v.push(case(id, Gen, X, 2, 0, 2, "inversion relation modulo p^2", None, c1b, i as u32 + 1));
    }
    v.push(case(
        "GEN-C1C",
        Gen,
        X,
        3,
        0,
        2,
        "inversion relation as a series in p",
        Some("checked for d = 1, 2 with the m = 0, 1, 2 terms, modulo p^3"),
        c1c,
        0,
    ));
    const C6: [&str; 3] = ["GEN-C6-1", "GEN-C6-2", "GEN-C6-3"];
    for (i, id) in C6.into_iter().enumerate() {
        v.push(case(id, Gen, X, 1, 0, 2, "distribution relation, m = 2", None, c6, i as u32 + 1));
    }
    v.push(case("GEN-C2", Gen, X, 2, 0, 3, "Q_p against the dilogarithm modulo p^2", None, c2, 0));
    v.push(case("GEN-C3", Gen, X, 1, 0, 3, "three-term relation for the dilogarithm", None, c3, 0));
    v.push(case("GEN-C4", Gen, X, 1, 0, 3, "Q_p^2/2 against the dilogarithm", None, c4, 0));
    v.push(case("GEN-C5", Gen, X, 1, 0, 3, "Q_p^3/6 against the trilogarithm", None, c5, 0));
    v.push(case("GEN-EQQ", Gen, X, 1, 0, 2, "Q_p against the finite logarithm", None, eqq, 0));
    v.push(case("GEN-L1", Gen, X, 1, 0, 3, "finite logarithm under x -> 1-x", None, l1, 0));
    v.push(case("GEN-L2", Gen, X, 1, 0, 3, "square of the finite logarithm", None, l2, 0));
    v.push(case("GEN-L3", Gen, X, 1, 0, 3, "cube of the finite logarithm", None, l3, 0));
    v.push(case(
        "GEN-GVAR",
        Gen,
        X,
        1,
        0,
        3,
        "square of the finite logarithm, upper half form",
        None,
        gvar,
        0,
    ));
    const POWERS: [&str; 3] = ["GEN-POWERS-2", "GEN-POWERS-3", "GEN-POWERS-4"];
    for (i, id) in POWERS.into_iter().enumerate() {
        let d = i as u32 + 2;
        v.push(case(
            id,
            Gen,
            X,
            1,
            0,
            (d as u64 + 1).max(3),
            "powers of the finite logarithm, Bernoulli correction at x^p",
            Some("compared modulo (x^(p+1), p)"),
            powers,
            d,
        ));
    }
    const MHS: [&str; 3] = ["GEN-MHS-1", "GEN-MHS-2", "GEN-MHS-3"];
    for (i, id) in MHS.into_iter().enumerate() {
        let d = i as u32 + 1;
        v.push(case(id, Gen, X, 1, 0, d as u64 + 1, "nested harmonic polynomial", None, mhs_case, d));
    }
    v
}

struct Gen {
    p: usize,
    m: u64,
    inv: InverseTable<Residue>,
}

impl Gen {
    fn new(env: &Env) -> Self {
        let m = env.p.pow(env.j);
        Gen { p: env.p as usize, m, inv: InverseTable::new(&m, env.p) }
    }

    fn li(&self, d: u32) -> Poly {
        polylog_poly(d, &self.inv, &self.m)
    }

    fn c(&self, n: i64) -> Residue {
        Residue::new(n as i128, self.m)
    }

    fn frac(&self, num: i64, den: i64) -> Residue {
        Residue::from_frac(&self.m, num, den).expect("unit denominator")
    }

    fn xp(&self) -> Poly {
        Poly::monomial(self.c(1), self.p)
    }

    fn one_minus_xp(&self) -> Poly {
        Poly::constant(self.c(1)).sub(&self.xp())
    }

    fn qp(&self) -> Poly {
        qp_poly(self.p as u64, &self.m)
    }
}

fn sign(d: u32) -> i64 {
    if d.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn one_minus(f: &Poly) -> Poly {
    f.compose_affine(&AffineMap::OneMinus)
}

/// `x^p f(1 - 1/x)`.
fn inv_one_minus(f: &Poly, p: usize) -> Poly {
    x_pow_at_one_minus_inv(f, p).expect("degree below p")
}

/// `(-1)^d x^p £_d(1/x)`.
fn inverted(g: &Gen, d: u32) -> Poly {
    g.li(d).reverse(g.p).expect("degree below p").scale_i64(sign(d))
}

fn c1(env: &Env, d: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    Ok(vec![Comparison::new(format!("d={d}"), 1, g.li(d), inverted(&g, d))])
}

fn c1b(env: &Env, d: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    let rhs = inverted(&g, d).sub(&g.li(d + 1).scale_i64(d as i64 * env.p as i64));
    Ok(vec![Comparison::new(format!("d={d}"), 2, g.li(d), rhs)])
}

fn c1c(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    let mut out = Vec::new();
    for d in 1..=2u32 {
        let mut rhs = Poly::zero(g.m);
        let mut pm = 1i64;
        for m in 0..=2u32 {
            let coef = crate::arith::binomial((d + m - 1) as i64, m as i64);
            let coef = Residue::from_bigint(&g.m, &coef);
            rhs = rhs.add(&g.li(d + m).scale(&coef).scale_i64(pm));
            pm *= env.p as i64;
        }
        out.push(Comparison::new(format!("d={d}"), 3, inverted(&g, d), rhs));
    }
    Ok(out)
}

fn c6(env: &Env, d: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    let f = g.li(d);
    let x2 = Poly::monomial(g.c(1), 2);
    let lhs = f.compose(&x2);
    let at_minus = f.compose_affine(&AffineMap::Scale(g.c(-1)));
    let one_plus_xp = Poly::constant(g.c(1)).add(&g.xp());
    let rhs = one_plus_xp.mul(&f).add(&g.one_minus_xp().mul(&at_minus)).scale_i64(1 << (d - 1));
    Ok(vec![Comparison::new(format!("d={d}"), 1, lhs, rhs)])
}

fn c2(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    let rhs = one_minus(&g.li(1)).neg().sub(&g.li(2).scale_i64(env.p as i64));
    Ok(vec![Comparison::new("C2", 2, g.qp(), rhs)])
}

fn c3(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    let f = g.li(2);
    let rhs = one_minus(&f).add(&inv_one_minus(&f, g.p));
    Ok(vec![Comparison::new("C3", 1, f, rhs)])
}

/// `x^p £_2(x) + (1 - x^p) £_2(1 - x)`.
fn dilog_pair(g: &Gen) -> Poly {
    let f = g.li(2);
    g.xp().mul(&f).add(&g.one_minus_xp().mul(&one_minus(&f)))
}

/// The right-hand side of the cube relation for the finite logarithm.
fn trilog_four_terms(g: &Gen) -> Poly {
    let f = g.li(3);
    let xp = g.xp();
    let omxp = g.one_minus_xp();
    let xp_omxp = xp.mul(&omxp);
    let at_minus_one = finite_polylog(3, &g.c(-1), &g.inv);
    xp.mul(&f)
        .add(&omxp.mul(&one_minus(&f)))
        .add(&xp_omxp.mul(&inv_one_minus(&f, g.p)))
        .add(&xp_omxp.scale(&g.frac(2, 3).mul(&at_minus_one)))
}

fn c4(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    let q = g.qp();
    let lhs = q.mul(&q).scale(&g.frac(1, 2));
    Ok(vec![Comparison::new("C4", 1, lhs, dilog_pair(&g).neg())])
}

fn c5(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    let lhs = g.qp().pow(3).scale(&g.frac(1, 6));
    Ok(vec![Comparison::new("C5", 1, lhs, trilog_four_terms(&g).neg())])
}

fn eqq(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    Ok(vec![Comparison::new("EQQ", 1, g.qp(), g.li(1).neg())])
}

fn l1(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    let f = g.li(1);
    Ok(vec![Comparison::new("L1", 1, f.clone(), one_minus(&f))])
}

fn l2(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    let f = g.li(1);
    let lhs = f.mul(&f).scale(&g.frac(1, 2));
    Ok(vec![Comparison::new("L2", 1, lhs, dilog_pair(&g).neg())])
}

fn l3(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    let lhs = g.li(1).pow(3).scale(&g.frac(1, 6));
    Ok(vec![Comparison::new("L3", 1, lhs, trilog_four_terms(&g))])
}

fn gvar(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    let f = g.li(1);
    let lhs = f.mul(&f).scale(&g.frac(1, 2));
    let f2 = g.li(2);
    let rhs = one_minus(&f2).add(&inv_one_minus(&f2, g.p).shift(g.p)).neg();
    Ok(vec![Comparison::new("GVAR", 1, lhs, rhs)])
}

fn powers(env: &Env, d: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    let cut = g.p + 1;
    let f = g.li(1);
    let mut pow = Poly::constant(g.c(1));
    let mut fact = 1i64;
    for i in 1..=d {
        pow = pow.mul(&f).truncate(cut);
        fact *= i as i64;
    }
    let lhs = pow.scale(&g.frac(1, fact));
    let b = Residue::new(env.constants()?.bernoulli(env.p - d as u64)? as i128, g.m);
    let corr = Poly::monomial(b.mul(&g.frac(sign(d), d as i64)), g.p);
    let rhs = one_minus(&g.li(d)).scale_i64(-sign(d)).add(&corr).truncate(cut);
    Ok(vec![Comparison::new(format!("d={d}"), 1, lhs, rhs)])
}

fn mhs_case(env: &Env, d: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let g = Gen::new(env);
    let inner = vec![1u32; d as usize - 1];
    let mut coeffs = vec![g.c(0); g.p];
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let below = if inner.is_empty() { g.c(1) } else { mhs::<Residue>(&g.m, &inner, k - 1, None)? };
        *slot = below.mul(g.inv.get(k));
    }
    let lhs = Poly::new(g.m, coeffs);
    let rhs = one_minus(&g.li(d)).scale_i64(sign(d - 1));
    Ok(vec![Comparison::new(format!("d={d}"), 1, lhs, rhs)])
}
