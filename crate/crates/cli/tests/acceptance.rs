//! End-to-end acceptance checks. Each test writes one `ACn PASS|FAIL` line to
//! stderr (outside the test harness capture) and then asserts.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::process::Command;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use polycong_core::arith::{
    exact_eval, inv_mod, mul_mod, padic_eval, primes_in, ArithError, Expr, PadicContext,
};
use polycong_core::congruences::{
    check_lattice, find_case, lattice_links, list_cases, verify_sweep, CaseDescriptor, CaseResult, Family,
    Status, Summary,
};
use polycong_core::identities::{registry, verify_identity};
use polycong_core::special::{bernoulli_mod, bernoulli_poly_mod, euler_mod, harmonic};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

fn criterion(name: &str, title: &str, run: impl FnOnce() -> Result<String, String>) {
    let start = Instant::now();
    let out = run();
    let secs = start.elapsed().as_secs_f64();
    let line = match &out {
        Ok(detail) => format!("{name} PASS {title}: {detail} [{secs:.1}s]\n"),
        Err(why) => format!("{name} FAIL {title}: {why} [{secs:.1}s]\n"),
    };
    let _ = std::io::stderr().write_all(line.as_bytes());
    if let Err(why) = out {
        panic!("{name}: {why}");
    }
}

fn family(f: Family) -> Vec<&'static CaseDescriptor> {
    list_cases().iter().filter(|c| c.family == f).collect()
}

/// Sweeps `cases` and requires every admissible run to pass and every case to run at least once.
fn sweep(cases: &[&CaseDescriptor], lo: u64, hi: u64) -> Result<String, String> {
    let report = verify_sweep(cases, lo, hi, None);
    let failed: Vec<String> = report
        .results
        .iter()
        .filter(|r| r.status != Status::Pass && r.status != Status::Skipped)
        .map(|r| format!("{}@{} {:?}", r.id, r.p, r.witness))
        .collect();
    if !failed.is_empty() {
        return Err(format!("{} failures, first: {}", failed.len(), failed[0]));
    }
    for c in cases {
        if !report.results.iter().any(|r| r.id == c.id && r.status == Status::Pass) {
            return Err(format!("{} never ran", c.id));
        }
    }
    let s = report.summary;
    Ok(format!("{} cases, {} passed, {} skipped by prime condition", cases.len(), s.pass, s.skipped))
}

fn require(ids: &[&str]) -> Result<(), String> {
    for id in ids {
        find_case(id).map_err(|e| e.to_string())?;
    }
    Ok(())
}

#[test]
fn ac1_identities() {
    criterion("AC1", "identity suite, n <= 25", || {
        let mut checks = 0;
        for case in registry() {
            let ss: Vec<Option<u32>> =
                if case.uses_s { vec![None, Some(1), Some(2), Some(3)] } else { vec![None] };
            for n in 1..=25 {
                for &s in &ss {
                    let out = verify_identity(case.id, n, s).map_err(|e| e.to_string())?;
                    if !out.passed() {
                        return Err(format!("{} n={n} s={s:?}", case.id));
                    }
                    checks += 1;
                }
            }
        }
        Ok(format!("{} identities, {checks} exact checks", registry().len()))
    });
}

#[test]
fn ac2_general() {
    criterion("AC2", "general congruences, 5 <= p <= 199", || sweep(&family(Family::Gen), 5, 199));
}

#[test]
fn ac3_special_values() {
    criterion("AC3", "special values, p <= 499", || {
        require(&["SV-THMI", "SV-THMW", "SV-THMPHI"])?;
        if find_case("SV-THMPHI").unwrap().condition.admits(5) {
            return Err("phi cases must exclude p = 5".into());
        }
        sweep(&family(Family::Sv), 5, 499)
    });
}

#[test]
fn ac4_central() {
    criterion("AC4", "polynomial congruences in t, p <= 97", || {
        let ids = [
            "MAIN-CC1",
            "MAIN-CC2",
            "MAIN-CC3",
            "MAIN-CC4",
            "MAIN-CC5",
            "MAIN-CC6",
            "MAIN-CC7",
            "MAIN-CC8",
            "MAIN-CC9",
            "MAIN-D3",
            "MAIN-SWITCH",
        ];
        require(&ids)?;
        for (id, j) in [("MAIN-CC1", 3), ("MAIN-CC2", 3), ("MAIN-CC7", 3), ("MAIN-D3", 2)] {
            if find_case(id).unwrap().j != j {
                return Err(format!("{id} is not checked modulo p^{j}"));
            }
        }
        sweep(&family(Family::Main), 5, 97)
    });
}

#[test]
fn ac5_numeric() {
    criterion("AC5", "numeric and auxiliary congruences, p <= 997", || {
        require(&[
            "NUM-SUN-1",
            "NUM-SUN-2",
            "NUM-SUN-3",
            "NUM-FIB-H1",
            "NUM-FIB-P1",
            "NUM-D3T4",
            "NUM-D4T4",
            "NUM-PHI-F",
            "NUM-PHI-L",
        ])?;
        let mut cases = family(Family::Num);
        cases.extend(family(Family::Aux));
        sweep(&cases, 5, 997)
    });
}

// --- AC6 -------------------------------------------------------------------

fn leaf(rng: &mut ChaCha8Rng, p: u64) -> Expr {
    let v: i32 = rng.gen_range(-2..=4);
    let mut u: i64 = rng.gen_range(1..60);
    if u % p as i64 == 0 {
        u += 1;
    }
    if rng.gen_bool(0.5) {
        u = -u;
    }
    let pv = BigInt::from(p).pow(v.unsigned_abs());
    Expr::Rational(if v >= 0 { BigRational::from_integer(pv * u) } else { BigRational::new(u.into(), pv) })
}

fn tree(rng: &mut ChaCha8Rng, p: u64, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return leaf(rng, p);
    }
    let a = tree(rng, p, depth - 1);
    if rng.gen_bool(0.1) {
        return Expr::pow(a, rng.gen_range(-2..=3));
    }
    let b = tree(rng, p, depth - 1);
    match rng.gen_range(0..4) {
        0 => Expr::add(a, b),
        1 => Expr::sub(a, b),
        2 => Expr::mul(a, b),
        _ => Expr::div(a, b),
    }
}

/// `q mod p^j` with plain big-integer arithmetic; `None` for negative valuation.
fn rational_mod(q: &BigRational, p: u64, j: u32) -> Option<u64> {
    if q.is_zero() {
        return Some(0);
    }
    let pb = BigInt::from(p);
    let (mut n, d, mut v) = (q.numer().clone(), q.denom(), 0u32);
    while (&n % &pb).is_zero() {
        n /= &pb;
        v += 1;
    }
    if (d % &pb).is_zero() {
        return None;
    }
    let m = pb.pow(j);
    let inv = d.extended_gcd(&m).x.mod_floor(&m);
    (n * inv * pb.pow(v)).mod_floor(&m).to_u64()
}

#[derive(Default)]
struct Tally {
    agreed: usize,
    refused: usize,
    poles: usize,
}

fn ac6_prime(p: u64, t: &mut Tally) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    for n in 0..1000 {
        let e = tree(&mut rng, p, 8);
        let exact = exact_eval(&e);
        for k in 1..=4 {
            let ctx = PadicContext::new(p, k, 2).unwrap();
            let approx = padic_eval(&e, ctx);
            for j in 1..=k {
                let got = approx.as_ref().map_err(Clone::clone).and_then(|x| x.reduce(j));
                match (&exact, got) {
                    (Ok(q), Ok(r)) => {
                        if rational_mod(q, p, j) != Some(r) {
                            return Err(format!("p={p} tree {n} k={k} j={j}: kernel {r}, exact {q}"));
                        }
                        t.agreed += 1;
                    }
                    (Ok(q), Err(ArithError::NegativeValuation(_))) => {
                        if rational_mod(q, p, j).is_some() {
                            return Err(format!("p={p} tree {n}: kernel reports a pole for {q}"));
                        }
                        t.poles += 1;
                    }
                    (Ok(_), Err(ArithError::PrecisionExhausted { .. } | ArithError::DivisionByZero)) => {
                        t.refused += 1
                    }
                    (Ok(_), Err(other)) => return Err(format!("p={p} tree {n}: {other}")),
                    (Err(_), Ok(r)) => return Err(format!("p={p} tree {n}: kernel {r} for a pole")),
                    (Err(_), Err(_)) => t.poles += 1,
                }
            }
        }
    }
    Ok(())
}

#[test]
fn ac6_arithmetic_oracle() {
    criterion("AC6", "p-adic kernel vs exact rationals, 1000 trees per prime", || {
        let mut t = Tally::default();
        for p in [5u64, 7, 11, 13] {
            ac6_prime(p, &mut t)?;
        }
        if t.agreed == 0 {
            return Err("no comparisons were decided".into());
        }
        Ok(format!(
            "{} residues agree, {} poles agree, {} refused for lost precision",
            t.agreed, t.poles, t.refused
        ))
    });
}

// --- AC7 -------------------------------------------------------------------

fn frac_mod(num: i64, den: i64, p: u64) -> u64 {
    mul_mod(num.rem_euclid(p as i64) as u64, inv_mod(den as i128, p).unwrap(), p)
}

#[test]
fn ac7_constants() {
    criterion("AC7", "Bernoulli/Euler cross-validation, 7 <= p <= 499", || {
        let primes = primes_in(7, 499);
        for &p in &primes {
            let ctx = PadicContext::new(p, 2, 2).unwrap();
            let via_h = |d: u32| harmonic(p - 1, d, ctx).shift(-1).reduce(1).map_err(|e| e.to_string());
            let b3 = bernoulli_mod(p - 3, p).map_err(|e| e.to_string())?;
            let b5 = bernoulli_mod(p - 5, p).map_err(|e| e.to_string())?;
            if via_h(2)? != mul_mod(frac_mod(2, 3, p), b3, p) {
                return Err(format!("weight 2 at p={p}"));
            }
            if via_h(4)? != mul_mod(frac_mod(4, 5, p), b5, p) {
                return Err(format!("weight 4 at p={p}"));
            }
            let quarter = bernoulli_poly_mod(p - 2, 1, 4, p).map_err(|e| e.to_string())?;
            let euler = mul_mod(8, euler_mod(p - 3, p).map_err(|e| e.to_string())?, p);
            if quarter != euler {
                return Err(format!("B_(p-2)(1/4) vs 8 E_(p-3) at p={p}"));
            }
        }
        Ok(format!("{} primes", primes.len()))
    });
}

#[test]
fn ac8_lattice() {
    criterion("AC8", "MAIN at t in {1,2,3,4,-1} vs NUM, p <= 97", || {
        let ts: BTreeSet<i64> = lattice_links().iter().map(|l| l.t).collect();
        if ts != [-1, 1, 2, 3, 4].into_iter().collect() {
            return Err(format!("links cover t in {ts:?}"));
        }
        let mut n = 0;
        for p in primes_in(5, 97) {
            for o in check_lattice(p).map_err(|e| e.to_string())? {
                if !o.agrees() {
                    return Err(format!(
                        "{} at t={} -> {}, p={p}: {:?} vs {:?}",
                        o.link.main, o.link.t, o.link.num, o.lhs, o.rhs
                    ));
                }
                n += 1;
            }
        }
        Ok(format!("{} links, {n} bit-exact agreements", lattice_links().len()))
    });
}

// --- AC9 -------------------------------------------------------------------

#[derive(Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Report {
    schema: u32,
    version: String,
    timestamp: String,
    cases: Vec<CaseResult>,
    summary: Summary,
    families: BTreeMap<String, Summary>,
}

struct Run {
    code: i32,
    stdout: String,
}

fn polycong(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_polycong")).args(args).output().expect("binary runs");
    Run { code: out.status.code().unwrap_or(-1), stdout: String::from_utf8(out.stdout).expect("utf-8") }
}

fn expect_code(args: &[&str], code: i32) -> Result<Run, String> {
    let run = polycong(args);
    if run.code != code {
        return Err(format!("`polycong {}` exited {} (wanted {code})", args.join(" "), run.code));
    }
    Ok(run)
}

fn cli_contract() -> Result<String, String> {
    // JSON report and round trip
    let run = expect_code(&["verify", "--case", "GEN-C3", "--primes", "5..50", "--format", "json"], 0)?;
    let raw: serde_json::Value = serde_json::from_str(&run.stdout).map_err(|e| e.to_string())?;
    let report: Report = serde_json::from_value(raw.clone()).map_err(|e| e.to_string())?;
    if report.schema != 1 || report.cases.len() != 13 || report.summary.pass != 13 {
        return Err(format!("unexpected report {:?}", report.summary));
    }
    if serde_json::to_value(&report).map_err(|e| e.to_string())? != raw {
        return Err("report does not round-trip".into());
    }

    // canonical output is independent of worker count
    let base = [
        "verify",
        "--family",
        "GEN",
        "--family",
        "NUM",
        "--primes",
        "5..60",
        "--format",
        "json",
        "--canonical",
    ];
    let serial = expect_code(&[&base[..], &["--jobs", "1"]].concat(), 0)?.stdout;
    let parallel = expect_code(&[&base[..], &["--jobs", "4"]].concat(), 0)?.stdout;
    let again = expect_code(&[&base[..], &["--jobs", "4"]].concat(), 0)?.stdout;
    if serial != parallel || parallel != again {
        return Err("canonical reports differ between runs".into());
    }

    // failures exit 1 and carry witnesses
    let bad = expect_code(
        &["verify", "--case", "GEN-C3", "--primes", "5..13", "--format", "json", "--perturb"],
        1,
    )?;
    let bad: Report = serde_json::from_str(&bad.stdout).map_err(|e| e.to_string())?;
    if bad.summary.fail != 4 || bad.cases.iter().any(|c| c.witness.is_none()) {
        return Err("perturbed run should fail with witnesses".into());
    }

    // usage errors exit 2
    for args in [
        &["verify", "--case", "NO-SUCH"][..],
        &["verify", "--primes", "50..10"],
        &["verify", "--format", "xml"],
        &["verify", "--family", "XYZ"],
        &["compute", "bernoulli", "2", "9"],
        &["compute", "fermat-quotient", "2"],
        &["frobnicate"],
    ] {
        expect_code(args, 2)?;
    }

    // catalog and constants
    let list = expect_code(&["list"], 0)?.stdout;
    let cc1 = list.lines().find(|l| l.starts_with("MAIN-CC1 ")).ok_or("MAIN-CC1 missing from list")?;
    if !(cc1.contains("mod p^3") && cc1.contains("p>3")) {
        return Err(format!("list row {cc1:?}"));
    }
    let sv = expect_code(&["list", "--family", "SV"], 0)?.stdout;
    if sv.lines().any(|l| !l.starts_with("SV-")) {
        return Err("list --family SV shows other families".into());
    }
    let json = expect_code(&["list", "--format", "json"], 0)?.stdout;
    let arr: Vec<serde_json::Value> = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    if arr.len() != list_cases().len() {
        return Err("list --format json length".into());
    }
    for (args, want) in [
        (&["compute", "fermat-quotient", "2", "7"][..], "2"),
        (&["compute", "bernoulli", "2", "7"], "6"),
        (&["compute", "polylog", "1", "1", "5", "--mod-exp", "2"], "0 (valuation 2)"),
    ] {
        let got = expect_code(args, 0)?.stdout;
        if got.trim() != want {
            return Err(format!("`{}` printed {got:?}", args.join(" ")));
        }
    }
    Ok("exit codes 0/1/2, schema 1 round-trip, canonical output stable across --jobs".into())
}

#[test]
fn ac9_cli() {
    criterion("AC9", "command-line contract", cli_contract);
}
