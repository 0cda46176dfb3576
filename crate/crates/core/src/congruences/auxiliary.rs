//! Binomial and harmonic congruences used inside the proofs, checked over all
//! indices `1 <= k <= p-1`.

use num_bigint::BigInt;

use super::{case, CaseDescriptor, Comparison, CongruenceError, Env, Family, Kind};
use crate::arith::{binomial, PadicApprox};
use crate::rings::Ring;
use crate::special::{harmonic, harmonic_prefix};

pub(super) fn cases() -> Vec<CaseDescriptor> {
    use Family::Aux;
    use Kind::Numeric as N;
    vec![
        case(
            "AUX-BIN2P",
            Aux,
            N,
            4,
            2,
            3,
            "C(2p,k) and C(2p,p) expansions",
            Some("C(2p,k) modulo p^3 for 1 <= k <= p-1, C(2p,p) modulo p^4"),
            bin2p,
            0,
        ),
        case("AUX-BINP1", Aux, N, 3, 2, 3, "C(p-1,k-1) and C(p-1+k,k-1) expansions", None, binp1, 0),
        case(
            "AUX-EULER",
            Aux,
            N,
            3,
            2,
            3,
            "Euler's criterion lifted through the Fermat quotient",
            Some("a in {2, 3, 5} with p not dividing a, n <= 3 terms modulo p^n"),
            euler,
            0,
        ),
        case("AUX-WOLST", Aux, N, 2, 2, 3, "Wolstenholme's theorem", None, wolstenholme, 0),
    ]
}

fn sign(k: u64) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn big(env: &Env, n: &BigInt) -> PadicApprox {
    PadicApprox::from_bigint(env.ctx, n)
}

fn bin2p(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let p = env.p;
    let h = harmonic_prefix::<PadicApprox>(&env.ctx, p as usize - 1, 1)?;
    let pp = env.p_pow(1);
    let mut out = Vec::new();
    for k in 1..p {
        let lhs = big(env, &binomial(2 * p as i64, k as i64));
        let inner = env.int(1).sub(&pp.mul(&h[k as usize - 1]).scale_i64(2));
        let rhs = env.frac(2 * sign(k - 1), k as i64).mul(&pp).mul(&inner);
        out.push(Comparison::new(format!("C(2p,{k})"), 3, lhs, rhs));
    }
    let lhs = big(env, &binomial(2 * p as i64, p as i64));
    let rhs = env.int(2).sub(&env.frac(4, 3).mul(&env.p_pow(3)).mul(&env.bernoulli(p - 3)?));
    out.push(Comparison::new("C(2p,p)", 4, lhs, rhs));
    Ok(out)
}

fn binp1(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let p = env.p;
    let n = p as usize - 1;
    let h = harmonic_prefix::<PadicApprox>(&env.ctx, n, 1)?;
    // H_m(1,1) = sum_{i<j<=m} 1/(ij), built from H_{m-1}(1)/m
    let mut h11 = vec![env.int(0); n + 1];
    for m in 1..=n {
        h11[m] = h11[m - 1].add(&h[m - 1].div(&env.int(m as i64))?);
    }
    let pp = env.p_pow(1);
    let pp2 = env.p_pow(2);
    let mut out = Vec::new();
    for k in 1..p {
        let i = k as usize - 1;
        let ph = pp.mul(&h[i]);
        let p2h = pp2.mul(&h11[i]);
        let lhs_a = big(env, &binomial(p as i64 - 1, k as i64 - 1));
        let rhs_a = env.int(1).sub(&ph).add(&p2h).scale_i64(sign(k - 1));
        out.push(Comparison::new(format!("C(p-1,{})", k - 1), 3, lhs_a, rhs_a));
        let lhs_b = big(env, &binomial((p + k) as i64 - 1, k as i64 - 1));
        let rhs_b = env.int(1).add(&ph).add(&p2h);
        out.push(Comparison::new(format!("C(p-1+{k},{})", k - 1), 3, lhs_b, rhs_b));
    }
    Ok(out)
}

fn euler(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let p = env.p;
    let series = [env.int(1), env.frac(1, 2), env.frac(-1, 8)];
    let mut out = Vec::new();
    for a in [2i64, 3, 5] {
        if (a as u64).is_multiple_of(p) {
            continue;
        }
        let leg = crate::arith::legendre(a, p) as i64;
        let lhs = env.int(a).pow(((p - 1) / 2) as i32)?.scale_i64(leg);
        let pq = env.p_pow(1).mul(&env.fermat_quotient(a)?);
        for n in 1..=3u32 {
            let mut rhs = env.int(0);
            let mut term = env.int(1);
            for s in series.iter().take(n as usize) {
                rhs = rhs.add(&s.mul(&term));
                term = term.mul(&pq);
            }
            out.push(Comparison::new(format!("a={a} n={n}"), n, lhs, rhs));
        }
    }
    Ok(out)
}

fn wolstenholme(env: &Env, _: u32) -> Result<Vec<Comparison>, CongruenceError> {
    let p = env.p;
    Ok(vec![
        Comparison::new("H_{p-1}(1)", 2, harmonic(p - 1, 1, env.ctx), env.int(0)),
        Comparison::new("H_{p-1}(2)", 1, harmonic(p - 1, 2, env.ctx), env.int(0)),
    ])
}
