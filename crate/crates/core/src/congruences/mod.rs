//! The congruence registry. Each case evaluates two sides at `p`-adic precision
//! `j + g` (or directly in `Z/p^j` when no division by `p` occurs) and compares
//! them modulo `p^j`.

mod auxiliary;
mod cache;
mod central;
mod general;
mod lattice;
mod numeric;
mod special_values;
mod value;

use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{is_prime, primes_in, ArithError};

pub use lattice::{check_lattice, lattice_links, LatticeLink, LatticeOutcome, LinkScale};
pub use value::{Comparison, Value, Witness};

pub(crate) use value::Env;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("unknown case {0}")]
    UnknownCase(String),
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("{id} requires {condition}, got p = {p}")]
    PrimeConditionViolated { id: String, p: u64, condition: PrimeCondition },
    #[error("left-hand side of {label} is not p-integral at coefficient {index}")]
    NonIntegralLhs { label: String, index: usize },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "GEN")]
    Gen,
    #[serde(rename = "SV")]
    Sv,
    #[serde(rename = "MAIN")]
    Main,
    #[serde(rename = "NUM")]
    Num,
    #[serde(rename = "AUX")]
    Aux,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Gen, Family::Sv, Family::Main, Family::Num, Family::Aux];

    pub fn name(self) -> &'static str {
        match self {
            Family::Gen => "GEN",
            Family::Sv => "SV",
            Family::Main => "MAIN",
            Family::Num => "NUM",
            Family::Aux => "AUX",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Self::ALL.into_iter().find(|f| f.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    PolynomialInX,
    PolynomialInT,
    Numeric,
    QuadNumeric,
}

/// `p > above`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeCondition {
    pub above: u64,
}

impl PrimeCondition {
    pub fn admits(self, p: u64) -> bool {
        p > self.above
    }
}

impl fmt::Display for PrimeCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p>{}", self.above)
    }
}

type Evaluator = fn(&Env, u32) -> Result<Vec<Comparison>, CongruenceError>;

#[derive(Clone, Serialize)]
pub struct CaseDescriptor {
    pub id: &'static str,
    pub family: Family,
    pub kind: Kind,
    /// Largest modulus exponent among the case's comparisons.
    pub j: u32,
    pub guard: u32,
    pub condition: PrimeCondition,
    pub anchor: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
    #[serde(skip)]
    eval: Evaluator,
    #[serde(skip)]
    param: u32,
}

impl fmt::Debug for CaseDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CaseDescriptor")
            .field("id", &self.id)
            .field("family", &self.family)
            .field("j", &self.j)
            .field("condition", &self.condition)
            .finish()
    }
}

impl CaseDescriptor {
    /// The two sides and modulus of every comparison in the case, without checking them.
    pub fn comparisons(&self, p: u64) -> Result<Vec<Comparison>, CongruenceError> {
        self.admit(p)?;
        let env = Env::new(p, self.j, self.guard)?;
        (self.eval)(&env, self.param)
    }

    fn admit(&self, p: u64) -> Result<(), CongruenceError> {
        if p < 3 || !is_prime(p) {
            return Err(CongruenceError::NotPrime(p));
        }
        if !self.condition.admits(p) {
            return Err(CongruenceError::PrimeConditionViolated {
                id: self.id.to_string(),
                p,
                condition: self.condition,
            });
        }
        Ok(())
    }
}

#[allow(clippy::too_many_arguments)]
pub(crate) const fn case(
    id: &'static str,
    family: Family,
    kind: Kind,
    j: u32,
    guard: u32,
    above: u64,
    anchor: &'static str,
    note: Option<&'static str>,
    eval: Evaluator,
    param: u32,
) -> CaseDescriptor {
    CaseDescriptor {
        id,
        family,
        kind,
        j,
        guard,
        condition: PrimeCondition { above },
        anchor,
        note,
        eval,
        param,
    }
}

fn registry() -> &'static [CaseDescriptor] {
    static REGISTRY: std::sync::OnceLock<Vec<CaseDescriptor>> = std::sync::OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(general::cases());
        all.extend(special_values::cases());
        all.extend(central::cases());
        all.extend(auxiliary::cases());
        all.extend(numeric::cases());
        all
    })
}

/// Every registered case, in a fixed order.
pub fn list_cases() -> &'static [CaseDescriptor] {
    registry()
}

pub fn find_case(id: &str) -> Result<&'static CaseDescriptor, CongruenceError> {
    registry().iter().find(|c| c.id == id).ok_or_else(|| CongruenceError::UnknownCase(id.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub id: String,
    pub p: u64,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub micros: u64,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Checks one case at one prime.
pub fn verify_case(id: &str, p: u64) -> Result<CaseResult, CongruenceError> {
    run_case(find_case(id)?, p, false)
}

fn run_case(case: &CaseDescriptor, p: u64, perturb: bool) -> Result<CaseResult, CongruenceError> {
    let start = Instant::now();
    let mut comparisons = case.comparisons(p)?;
    if perturb {
        comparisons = comparisons.iter().map(|c| c.perturbed(p)).collect();
    }
    let mut witness = None;
    for c in &comparisons {
        if let Some(w) = c.check(p)? {
            witness = Some(w);
            break;
        }
    }
    let status = if witness.is_none() { Status::Pass } else { Status::Fail };
    Ok(CaseResult { id: case.id.to_string(), p, status, witness, micros: start.elapsed().as_micros() as u64 })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn record(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Skipped => self.skipped += 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub results: Vec<CaseResult>,
    pub summary: Summary,
}

/// Runs every `(case, p)` pair for primes in `lo..=hi`. Primes outside a case's
/// condition are reported as skipped; evaluation errors are reported as failures
/// carrying the error text. Results are sorted by `(id, p)`.
pub fn verify_sweep(cases: &[&CaseDescriptor], lo: u64, hi: u64, jobs: Option<usize>) -> SweepReport {
    verify_sweep_with(cases, lo, hi, SweepOptions { jobs, perturb: false })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepOptions {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Check every comparison with a perturbed right-hand side instead
    /// (see [`Comparison::perturbed`]); a sound harness then reports no passes.
    pub perturb: bool,
}

pub fn verify_sweep_with(cases: &[&CaseDescriptor], lo: u64, hi: u64, opts: SweepOptions) -> SweepReport {
    let SweepOptions { jobs, perturb } = opts;
    let primes: Vec<u64> = primes_in(lo, hi).into_iter().filter(|&p| p > 2).collect();
    let pairs: Vec<(&CaseDescriptor, u64)> =
        cases.iter().flat_map(|c| primes.iter().map(move |&p| (*c, p))).collect();
    let run = || pairs.par_iter().map(|&(c, p)| sweep_one(c, p, perturb)).collect::<Vec<_>>();
    let mut results = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|_| run()),
        None => run(),
    };
    results.sort_by(|a, b| (a.id.as_str(), a.p).cmp(&(b.id.as_str(), b.p)));
    results.dedup_by(|a, b| a.id == b.id && a.p == b.p);
    let mut summary = Summary::default();
    for r in &results {
        summary.record(r.status);
    }
    SweepReport { results, summary }
}

fn sweep_one(case: &CaseDescriptor, p: u64, perturb: bool) -> CaseResult {
    match run_case(case, p, perturb) {
        Ok(r) => r,
        Err(CongruenceError::PrimeConditionViolated { .. }) => {
            CaseResult { id: case.id.to_string(), p, status: Status::Skipped, witness: None, micros: 0 }
        }
        Err(e) => CaseResult {
            id: case.id.to_string(),
            p,
            status: Status::Fail,
            witness: Some(Witness::error(e.to_string())),
            micros: 0,
        },
    }
}
