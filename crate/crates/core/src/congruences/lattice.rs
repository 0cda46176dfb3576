//! Cross-checks between the polynomial congruences in `t` and their numerical
//! specializations: both sides of a MAIN case, evaluated at an integer `t` and
//! rescaled, must reduce to exactly the residues of the matching NUM case.

use serde::Serialize;

use super::{find_case, CongruenceError, Value};
use crate::arith::PadicApprox;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LinkScale {
    /// Multiply the MAIN side by `num / den`.
    Const(i64, i64),
    /// Multiply the MAIN side by `t^(1-p)`.
    InverseTPow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeLink {
    pub main: &'static str,
    pub t: i64,
    pub num: &'static str,
    pub scale: LinkScale,
}

const fn link(main: &'static str, t: i64, num: &'static str, scale: LinkScale) -> LatticeLink {
    LatticeLink { main, t, num, scale }
}

const ONE: LinkScale = LinkScale::Const(1, 1);

const LINKS: &[LatticeLink] = &[
    link("MAIN-CC3", -1, "NUM-FIB-H1", ONE),
    link("MAIN-CC4", -1, "NUM-FIB-H2", ONE),
    link("MAIN-CC1", -1, "NUM-FIB-P1", ONE),
    link("MAIN-CC2", -1, "NUM-FIB-P2", ONE),
    link("MAIN-CC1", 2, "NUM-SUN-1", ONE),
    link("MAIN-CC2", 2, "NUM-SUN-2", ONE),
    link("MAIN-CC2", 4, "NUM-SUN-3", ONE),
    link("MAIN-D3", 4, "NUM-D3T4", ONE),
    link("MAIN-CC7", 1, "NUM-CC7-T1", ONE),
    link("MAIN-CC7", 3, "NUM-CC7-T3", LinkScale::InverseTPow),
    link("MAIN-CC8", -1, "NUM-CC8-LM1", LinkScale::Const(-1, 1)),
    link("MAIN-CC9", 1, "NUM-CC9-B", LinkScale::Const(2, 1)),
];

pub fn lattice_links() -> &'static [LatticeLink] {
    LINKS
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeOutcome {
    pub link: LatticeLink,
    pub p: u64,
    pub j: u32,
    /// `(MAIN, NUM)` residues of the left-hand sides modulo `p^j`.
    pub lhs: (u64, u64),
    pub rhs: (u64, u64),
}

impl LatticeOutcome {
    pub fn agrees(&self) -> bool {
        self.lhs.0 == self.lhs.1 && self.rhs.0 == self.rhs.1
    }
}

fn sides(v: &super::Comparison) -> (&Value, &Value) {
    (&v.lhs, &v.rhs)
}

fn eval_scaled(v: &Value, t: &PadicApprox, factor: &PadicApprox) -> PadicApprox {
    match v {
        Value::PadicPoly(f) => f.eval(t).mul(factor),
        _ => panic!("MAIN lattice sides are polynomials in t"),
    }
}

fn scalar(v: &Value) -> &PadicApprox {
    match v {
        Value::Padic(x) => x,
        _ => panic!("NUM lattice sides are scalars"),
    }
}

/// Evaluates every link admissible at `p`.
pub fn check_lattice(p: u64) -> Result<Vec<LatticeOutcome>, CongruenceError> {
    let mut out = Vec::new();
    for l in LINKS {
        let main = find_case(l.main)?;
        let num = find_case(l.num)?;
        if !main.condition.admits(p) || !num.condition.admits(p) {
            continue;
        }
        let mc = main.comparisons(p)?;
        let nc = num.comparisons(p)?;
        let (m_lhs, m_rhs) = sides(&mc[0]);
        let (n_lhs, n_rhs) = sides(&nc[0]);
        let ctx = match m_lhs {
            Value::PadicPoly(f) => *f.ctx(),
            _ => panic!("MAIN lattice sides are polynomials in t"),
        };
        let t = PadicApprox::from_i64(ctx, l.t);
        let factor = match l.scale {
            LinkScale::Const(a, b) => PadicApprox::from_ratio(ctx, a as i128, b as i128)?,
            LinkScale::InverseTPow => t.pow(1 - p as i32)?,
        };
        let j = nc[0].j;
        let lhs = (eval_scaled(m_lhs, &t, &factor).reduce(j)?, scalar(n_lhs).reduce(j)?);
        let rhs = (eval_scaled(m_rhs, &t, &factor).reduce(j)?, scalar(n_rhs).reduce(j)?);
        out.push(LatticeOutcome { link: *l, p, j, lhs, rhs });
    }
    Ok(out)
}
