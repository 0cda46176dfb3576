use clap::ValueEnum;
use polycong_core::arith::{fermat_quotient, is_prime, ArithError, PadicApprox, PadicContext};
use polycong_core::polylog::finite_polylog;
use polycong_core::rings::InverseTable;
use polycong_core::special::{bernoulli_mod, euler_mod, harmonic, lucas_quotient};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum What {
    /// D X P: the finite polylogarithm of weight D at X.
    Polylog,
    /// M P: B_M modulo P.
    Bernoulli,
    /// N P: E_N modulo P.
    Euler,
    /// A P: (A^(P-1) - 1) / P.
    FermatQuotient,
    /// P: (L_P - 1) / P.
    LucasQuotient,
    /// N D P: sum of r^(-D) for r <= N.
    Harmonic,
}

impl What {
    fn usage(self) -> &'static str {
        match self {
            What::Polylog => "polylog D X P",
            What::Bernoulli => "bernoulli M P",
            What::Euler => "euler N P",
            What::FermatQuotient => "fermat-quotient A P",
            What::LucasQuotient => "lucas-quotient P",
            What::Harmonic => "harmonic N D P",
        }
    }

    fn arity(self) -> usize {
        match self {
            What::LucasQuotient => 1,
            What::Bernoulli | What::Euler | What::FermatQuotient => 2,
            What::Polylog | What::Harmonic => 3,
        }
    }
}

fn num<T: std::str::FromStr>(s: &str, name: &str) -> Result<T, String>
where
    T::Err: std::fmt::Display,
{
    s.parse::<T>().map_err(|e| format!("{name}: {e}"))
}

/// Residue modulo `p^j`, with the valuation appended when it is not zero.
fn show(x: &PadicApprox, j: u32) -> Result<String, String> {
    match x.reduce(j) {
        Ok(r) => match x.valuation() {
            Some(v) if v != 0 => Ok(format!("{r} (valuation {v})")),
            _ => Ok(r.to_string()),
        },
        Err(ArithError::NegativeValuation(v)) => Ok(format!("not p-integral (valuation {v})")),
        Err(e) => Err(e.to_string()),
    }
}

pub fn run(what: What, args: &[String], j: u32) -> Result<String, String> {
    if args.len() != what.arity() {
        return Err(format!("expected {}", what.usage()));
    }
    let p: u64 = num(&args[args.len() - 1], "P")?;
    if p < 3 || !is_prime(p) {
        return Err(ArithError::NotOddPrime(p).to_string());
    }
    if j == 0 {
        return Err("--mod-exp must be at least 1".to_string());
    }
    let mod_p_only = |w: &str| {
        if j == 1 {
            Ok(())
        } else {
            Err(format!("{w} values are computed modulo p only"))
        }
    };
    let ctx = || PadicContext::with_default_guard(p, j).map_err(|e| e.to_string());
    match what {
        What::Bernoulli => {
            mod_p_only("Bernoulli")?;
            bernoulli_mod(num(&args[0], "M")?, p).map(|r| r.to_string()).map_err(|e| e.to_string())
        }
        What::Euler => {
            mod_p_only("Euler")?;
            euler_mod(num(&args[0], "N")?, p).map(|r| r.to_string()).map_err(|e| e.to_string())
        }
        What::FermatQuotient => {
            let q = fermat_quotient(num(&args[0], "A")?, ctx()?).map_err(|e| e.to_string())?;
            show(&q, j)
        }
        What::LucasQuotient => show(&lucas_quotient(ctx()?), j),
        What::Harmonic => {
            let n: u64 = num(&args[0], "N")?;
            let d: u32 = num(&args[1], "D")?;
            show(&harmonic(n, d, ctx()?), j)
        }
        What::Polylog => {
            let d: u32 = num(&args[0], "D")?;
            let x = parse_ratio(&args[1], ctx()?)?;
            let inv: InverseTable<PadicApprox> = InverseTable::new(&ctx()?, p);
            show(&finite_polylog(d, &x, &inv), j)
        }
    }
}

/// An integer or `a/b`.
fn parse_ratio(s: &str, ctx: PadicContext) -> Result<PadicApprox, String> {
    match s.split_once('/') {
        None => Ok(PadicApprox::from_i64(ctx, num(s, "X")?)),
        Some((a, b)) => {
            let (a, b): (i128, i128) = (num(a, "X")?, num(b, "X")?);
            PadicApprox::from_ratio(ctx, a, b).map_err(|e| e.to_string())
        }
    }
}
