use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use polycong_core::congruences::{
    find_case, list_cases, verify_sweep_with, CaseDescriptor, Family, SweepOptions,
};

mod compute;
mod report;

use report::Report;

const EXIT_OK: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "polycong", version, about = "Verify finite polylogarithm congruences over prime sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run cases over a range of primes.
    Verify {
        /// Case id; repeatable.
        #[arg(long = "case", value_name = "ID")]
        cases: Vec<String>,
        /// Case family (GEN, SV, MAIN, NUM, AUX); repeatable.
        #[arg(long = "family", value_name = "FAM", value_parser = parse_family)]
        families: Vec<Family>,
        /// Inclusive prime range.
        #[arg(long, value_name = "LO..HI", default_value = "5..97", value_parser = parse_range)]
        primes: (u64, u64),
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads (defaults to all cores).
        #[arg(long, value_name = "N")]
        jobs: Option<usize>,
        /// Zero the timestamp and timings so reports are byte-comparable.
        #[arg(long)]
        canonical: bool,
        /// Self-test: shift every right-hand side by p^(j-1); all admissible runs should fail.
        #[arg(long, hide = true)]
        perturb: bool,
    },
    /// Print the case catalog.
    List {
        #[arg(long = "family", value_name = "FAM", value_parser = parse_family)]
        families: Vec<Family>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate a single constant modulo p^J.
    Compute {
        #[arg(value_enum)]
        what: compute::What,
        #[arg(allow_negative_numbers = true, num_args = 1..)]
        args: Vec<String>,
        #[arg(long = "mod-exp", value_name = "J", default_value_t = 1)]
        mod_exp: u32,
    },
}

/// Writes to stdout, tolerating a closed pipe.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::parse(s).ok_or_else(|| format!("unknown family {s:?} (expected GEN, SV, MAIN, NUM or AUX)"))
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let lo = lo.trim().parse::<u64>().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi = hi.trim().parse::<u64>().map_err(|e| format!("bad upper bound: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn select(ids: &[String], families: &[Family]) -> Result<Vec<&'static CaseDescriptor>, String> {
    if ids.is_empty() && families.is_empty() {
        return Ok(list_cases().iter().collect());
    }
    let mut out: Vec<&'static CaseDescriptor> = Vec::new();
    for id in ids {
        let case = find_case(id).map_err(|e| e.to_string())?;
        out.push(case);
    }
    out.extend(list_cases().iter().filter(|c| families.contains(&c.family)));
    out.sort_by_key(|c| c.id);
    out.dedup_by_key(|c| c.id);
    Ok(out)
}

struct VerifyArgs {
    cases: Vec<String>,
    families: Vec<Family>,
    primes: (u64, u64),
    format: Format,
    jobs: Option<usize>,
    canonical: bool,
    perturb: bool,
}

fn verify(args: VerifyArgs) -> u8 {
    let VerifyArgs { cases: ids, families, primes: (lo, hi), format, jobs, canonical, perturb } = args;
    let cases = match select(&ids, &families) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut report = Report::new(verify_sweep_with(&cases, lo, hi, SweepOptions { jobs, perturb }));
    if canonical {
        report.canonicalize();
    }
    match format {
        Format::Json => match serde_json::to_string_pretty(&report) {
            Ok(s) => emit(&format!("{s}\n")),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_FAIL;
            }
        },
        Format::Text => emit(&report.to_text()),
    }
    if report.summary.fail == 0 {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn list(families: &[Family], format: Format) -> u8 {
    let cases: Vec<&CaseDescriptor> =
        list_cases().iter().filter(|c| families.is_empty() || families.contains(&c.family)).collect();
    match format {
        Format::Json => match serde_json::to_string_pretty(&cases) {
            Ok(s) => emit(&format!("{s}\n")),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_FAIL;
            }
        },
        Format::Text => {
            let mut out = String::new();
            for c in cases {
                out.push_str(&format!(
                    "{:<14} {:<5} mod p^{}  {:<5} {}\n",
                    c.id,
                    c.family.name(),
                    c.j,
                    c.condition.to_string(),
                    c.anchor
                ));
            }
            emit(&out);
        }
    }
    EXIT_OK
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify { cases, families, primes, format, jobs, canonical, perturb } => {
            verify(VerifyArgs { cases, families, primes, format, jobs, canonical, perturb })
        }
        Command::List { families, format } => list(&families, format),
        Command::Compute { what, args, mod_exp } => match compute::run(what, &args, mod_exp) {
            Ok(line) => {
                emit(&format!("{line}\n"));
                EXIT_OK
            }
            Err(e) => {
                eprintln!("error: {e}");
                EXIT_USAGE
            }
        },
    };
    ExitCode::from(code)
}
