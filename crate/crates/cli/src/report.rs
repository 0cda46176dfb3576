use std::collections::BTreeMap;
use std::fmt::Write;

use polycong_core::congruences::{find_case, CaseResult, Status, Summary, SweepReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;
const EPOCH: &str = "1970-01-01T00:00:00Z";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub version: String,
    pub timestamp: String,
    pub cases: Vec<CaseResult>,
    pub summary: Summary,
    /// Per-family counts keyed by family name.
    pub families: BTreeMap<String, Summary>,
}

impl Report {
    pub fn new(sweep: SweepReport) -> Self {
        let mut families: BTreeMap<String, Summary> = BTreeMap::new();
        for r in &sweep.results {
            let fam = find_case(&r.id).map(|c| c.family.name()).unwrap_or("?");
            families.entry(fam.to_string()).or_default().record(r.status);
        }
        Report {
            schema: SCHEMA,
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            cases: sweep.results,
            summary: sweep.summary,
            families,
        }
    }

    pub fn canonicalize(&mut self) {
        self.timestamp = EPOCH.to_string();
        self.cases.sort_by(|a, b| (a.id.as_str(), a.p).cmp(&(b.id.as_str(), b.p)));
        for c in &mut self.cases {
            c.micros = 0;
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let _ = write!(s, "{tag} {:<14} p={:<4} {:>8}us", c.id, c.p, c.micros);
            if let Some(w) = &c.witness {
                let _ = write!(s, "  at {}[{}]", w.label, w.index);
                if let Some(r) = w.residue {
                    let _ = write!(s, " residual {r}");
                }
                if let Some(v) = w.valuation {
                    let _ = write!(s, " valuation {v}");
                }
                if let Some(e) = &w.error {
                    let _ = write!(s, " error: {e}");
                }
            }
            s.push('\n');
        }
        for (fam, sum) in &self.families {
            let _ = writeln!(s, "{fam:<5} pass {} fail {} skipped {}", sum.pass, sum.fail, sum.skipped);
        }
        let t = &self.summary;
        let _ = writeln!(s, "total pass {} fail {} skipped {}", t.pass, t.fail, t.skipped);
        s
    }
}
