//! Numerical specializations at particular values of `t`.

use super::{case, CaseDescriptor, Comparison, CongruenceError, Env, Family, Kind};
use crate::arith::{PadicApprox, Residue};
use crate::rings::Ring;
use crate::special::{fib_lucas_mod, harmonic_prefix};

pub(super) fn cases() -> Vec<CaseDescriptor> {
    use Family::Num;
    use Kind::Numeric as N;
    let fib = "t = -1, Fibonacci and Lucas numbers";
    let sun = "three conjectured congruences at t = 2 and t = 4";
    let cc7 = "central binomial sums at t = 1, 3 and -1/2";
    let mention = "specializations of the u_p(t,t), v_p(t,t) congruences";
    vec![
        case("NUM-FIB-H1", Num, N, 1, 2, 5, fib, None, fib_h, 1),
        case("NUM-FIB-H2", Num, N, 1, 2, 5, fib, None, fib_h, 2),
        case("NUM-FIB-H0", Num, N, 1, 2, 5, fib, None, fib_h, 0),
        case("NUM-FIB-P1", Num, N, 3, 2, 5, fib, None, fib_p, 1),
        case("NUM-FIB-P2", Num, N, 3, 2, 5, fib, None, fib_p, 2),
        case("NUM-FIB-P0", Num, N, 3, 2, 5, fib, None, fib_p, 0),
        case("NUM-SUN-1", Num, N, 3, 2, 3, sun, None, sun_case, 1),
        case("NUM-SUN-2", Num, N, 3, 2, 3, sun, None, sun_case, 2),
        case("NUM-SUN-3", Num, N, 3, 2, 3, sun, None, sun_case, 3),
        case("NUM-D3T4", Num, N, 2, 2, 3, "weight three sum at t = 4", None, d3t4, 0),
        case(
            "NUM-D4T4",
            Num,
            N,
            1,
            2,
            3,
            "weight four sum at t = 4",
            Some("checked directly from its statement; no weight four polynomial identity is used"),
            d4t4,
            0,
        ),
        case("NUM-CC7-T1", Num, N, 3, 2, 3, cc7, None, cc7_case, 1),
        case("NUM-CC7-T3", Num, N, 3, 2, 3, cc7, None, cc7_case, 3),
        case("NUM-CC7-TM2", Num, N, 3, 2, 3, cc7, None, cc7_case, 2),
        case(
            "NUM-CC8-LM1",
            Num,
            N,
            2,
            2,
            3,
            mention,
            Some("sign of the p q_L^2 term corrected to +, as obtained from the t = -1 value of the v_p(t,t) congruence"),
            cc8_lm1,
            0,
        ),
        case("NUM-CC9-B", Num, N, 1, 2, 3, mention, None, cc9_b, 0),
        case("NUM-PHI-F", Num, N, 2, 2, 5, "t = 2 ∓ √5, conjugates combined", None, phi_f, 0),
        case("NUM-PHI-L", Num, N, 1, 2, 5, "t = 2 ∓ √5, conjugates combined", None, phi_l, 0),
    ]
}

struct Num<'a> {
    env: &'a Env,
    p: usize,
    central: Vec<PadicApprox>,
}

impl<'a> Num<'a> {
    fn new(env: &'a Env) -> Self {
        let p = env.p as usize;
        Num { env, p, central: env.central_binomials(p) }
    }

    /// `sum_{k=1}^{p-1} w(k) t^k / (k^d C(2k,k))`, multiplied by `p`.
    fn reciprocal_sum(&self, t: i64, d: u32, w: impl Fn(usize) -> PadicApprox) -> PadicApprox {
        let env = self.env;
        let mut acc = env.int(0);
        let mut tk = env.int(1);
        let tt = env.int(t);
        for k in 1..self.p {
            tk = tk.mul(&tt);
            let den = env.int(k as i64).pow(d as i32).expect("unit").mul(&self.central[k]);
            acc = acc.add(&w(k).mul(&tk).div(&den).expect("nonzero"));
        }
        acc.mul(&env.p_pow(1))
    }

    fn harmonic2(&self) -> Vec<PadicApprox> {
        harmonic_prefix(&self.env.ctx, self.p - 1, 2).expect("units")
    }

    /// `(F_n, L_n)` to the full precision of the context.
    fn fib_lucas(&self, n: u64) -> (PadicApprox, PadicApprox) {
        let m = self.env.ctx.modulus();
        let (f, l) = fib_lucas_mod(n, m);
        let read = |x| PadicApprox::from_residue(self.env.ctx, Residue::from_u64(x, m));
        (read(f), read(l))
    }
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn fib_h(env: &Env, d: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let n = Num::new(env);
    let h = n.harmonic2();
    let lhs = n.reciprocal_sum(-1, d, |k| h[k - 1]);
    let l5 = env.leg5();
    let ql = env.lucas_quotient();
    let ql2 = ql.mul(&ql);
    let rhs = match d {
        1 => env.frac(l5, 5).mul(&ql2),
        2 => {
            let b = env.bernoulli(env.p - 3)?;
            env.frac(4, 15).mul(&ql2.mul(&ql).mul(&env.frac(1, 2)).add(&b))
        }
        0 => ql.mul(&env.frac(1, 5)).add(&env.frac(2 * l5, 25).mul(&ql2)),
        _ => unreachable!("registered for d = 0, 1, 2"),
    };
    Ok(vec![Comparison::new(format!("d={d}"), 1, lhs, rhs)])
}

fn fib_p(env: &Env, d: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let n = Num::new(env);
    let lhs = n.reciprocal_sum(-1, d, |_| env.int(1));
    let l5 = env.leg5();
    let ql = env.lucas_quotient();
    let ql2 = ql.mul(&ql);
    let (f, l) = n.fib_lucas(env.p);
    let p2 = env.p_pow(2);
    let rhs = match d {
        1 => {
            let head = env.int(1).sub(&l.mul(&f)).mul(&env.frac(1, 2));
            head.add(&p2.mul(&env.frac(l5, 5)).mul(&ql2))
        }
        2 => {
            let head = env.int(1).sub(&l.mul(&l)).div(&env.int(2 * env.p as i64))?;
            let b = env.bernoulli(env.p - 3)?;
            let tail = ql2.mul(&ql).mul(&env.frac(1, 2)).add(&b);
            head.add(&p2.mul(&env.frac(4, 15)).mul(&tail))
        }
        0 => {
            let head = env.p_pow(1).sub(&l.mul(&f)).mul(&env.frac(1, 5));
            head.add(&p2.mul(&env.frac(2 * l5, 25)).mul(&ql2))
        }
        _ => unreachable!("registered for d = 0, 1, 2"),
    };
    Ok(vec![Comparison::new(format!("d={d}"), 3, lhs, rhs)])
}

fn sun_case(env: &Env, which: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let n = Num::new(env);
    let q = env.fermat_quotient(2)?;
    let p1 = env.p_pow(1);
    let p2 = env.p_pow(2);
    let (lhs, rhs) = match which {
        1 => {
            let e = env.euler(env.p - 3)?;
            let rhs = env.int(env.leg_minus1() - 1).sub(&p1.mul(&q)).add(&p2.mul(&e));
            (n.reciprocal_sum(2, 1, |_| env.int(1)), rhs)
        }
        2 => {
            let b = env.bernoulli(env.p - 3)?;
            (n.reciprocal_sum(2, 2, |_| env.int(1)), q.neg().add(&p2.mul(&env.frac(1, 16)).mul(&b)))
        }
        3 => {
            let b = env.bernoulli(env.p - 3)?;
            let rhs = q.scale_i64(-4).sub(&p1.mul(&q).mul(&q).scale_i64(2)).add(&p2.mul(&b));
            (n.reciprocal_sum(4, 2, |_| env.int(1)), rhs)
        }
        _ => unreachable!("registered for 1, 2, 3"),
    };
    Ok(vec![Comparison::new(format!("conjecture {which}"), 3, lhs, rhs)])
}

fn d3t4(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let n = Num::new(env);
    let lhs = n.reciprocal_sum(4, 3, |_| env.int(1));
    let q = env.fermat_quotient(2)?;
    let q2 = q.mul(&q);
    let b = env.bernoulli(env.p - 3)?;
    let tail = env.frac(4, 3).mul(&q2).mul(&q).sub(&env.frac(1, 6).mul(&b));
    let rhs = q2.scale_i64(-4).add(&env.p_pow(1).mul(&tail));
    Ok(vec![Comparison::new("t=4 d=3", 2, lhs, rhs)])
}

fn d4t4(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let n = Num::new(env);
    let lhs = n.reciprocal_sum(4, 4, |_| env.int(1));
    let q = env.fermat_quotient(2)?;
    let b = env.bernoulli(env.p - 3)?;
    let rhs = env.frac(-4, 3).mul(&q.mul(&q).mul(&q).scale_i64(2).add(&b));
    Ok(vec![Comparison::new("t=4 d=4", 1, lhs, rhs)])
}

fn cc7_case(env: &Env, which: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let n = Num::new(env);
    let l3 = env.leg3();
    let p2 = env.p_pow(2);
    let (label, lhs, rhs) = match which {
        1 => {
            let lhs = (0..n.p).fold(env.int(0), |acc, k| acc.add(&n.central[k]));
            let b13 = env.bernoulli_poly(env.p - 2, 1, 3)?;
            ("sum C(2k,k)", lhs, env.int(l3).sub(&p2.mul(&env.frac(1, 3)).mul(&b13)))
        }
        3 => {
            let third = env.frac(1, 3);
            let mut pw = env.int(1);
            let mut lhs = env.int(0);
            for k in 0..n.p {
                lhs = lhs.add(&n.central[k].mul(&pw));
                pw = pw.mul(&third);
            }
            let b13 = env.bernoulli_poly(env.p - 2, 1, 3)?;
            ("sum C(2k,k)/3^k", lhs, env.int(l3).sub(&p2.mul(&env.frac(2, 9)).mul(&b13)))
        }
        2 => {
            let mut pw = env.int(1);
            let mut lhs = env.int(0);
            for k in 1..n.p {
                pw = pw.mul(&env.int(-2));
                lhs = lhs.add(&n.central[k].mul(&pw));
            }
            let rhs = env.p_pow(1).mul(&env.frac(-4, 3)).mul(&env.fermat_quotient(2)?);
            ("sum (-2)^k C(2k,k)", lhs, rhs)
        }
        _ => unreachable!("registered for 1, 2, 3"),
    };
    Ok(vec![Comparison::new(label, 3, lhs, rhs)])
}

fn cc8_lm1(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let n = Num::new(env);
    let mut lhs = env.int(0);
    for k in 1..n.p {
        lhs = lhs.add(&n.central[k].div(&env.int(k as i64 * sign(k)))?);
    }
    let ql = env.lucas_quotient();
    let rhs = ql.scale_i64(-2).add(&env.p_pow(1).mul(&ql).mul(&ql));
    Ok(vec![Comparison::new("sum (-1)^k C(2k,k)/k", 2, lhs, rhs)])
}

fn cc9_b(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let n = Num::new(env);
    let mut lhs = env.int(0);
    for k in 1..n.p {
        lhs = lhs.add(&n.central[k].div(&env.int((k * k) as i64))?);
    }
    let b13 = env.bernoulli_poly(env.p - 2, 1, 3)?;
    let rhs = env.frac(env.leg3(), 2).mul(&b13);
    Ok(vec![Comparison::new("sum C(2k,k)/k^2", 1, lhs, rhs)])
}

/// `sum_{k=1}^{p-1} (-1)^k C(2k,k) w_{3k - (p/5)} / k^d` with `w` = F or L.
fn phi_sum(n: &Num, d: u32, lucas: bool) -> PadicApprox {
    let env = n.env;
    let m = env.ctx.modulus();
    let shift = env.leg5();
    let mut acc = env.int(0);
    for k in 1..n.p {
        let idx = (3 * k as i64 - shift) as u64;
        let (f, l) = fib_lucas_mod(idx, m);
        let w = PadicApprox::from_residue(env.ctx, Residue::from_u64(if lucas { l } else { f }, m));
        let den = env.int(sign(k) * (k as i64).pow(d));
        acc = acc.add(&n.central[k].mul(&w).div(&den).expect("unit"));
    }
    acc
}

fn phi_f(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let n = Num::new(env);
    let ql = env.lucas_quotient();
    let rhs = env.p_pow(1).mul(&env.frac(1, 5)).mul(&ql).mul(&ql);
    Ok(vec![Comparison::new("Fibonacci", 2, phi_sum(&n, 1, false), rhs)])
}

fn phi_l(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let n = Num::new(env);
    Ok(vec![Comparison::new("Lucas", 1, phi_sum(&n, 2, true), env.int(0))])
}
