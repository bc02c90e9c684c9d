//! Writers for sweep output: a JSON line per record followed by a summary
//! line, or plain text.

use std::io::{self, Write};

use serde::Serialize;

use super::sweep::SweepOutcome;

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a super::sweep::SweepSummary,
    coverage: String,
}

/// One JSON object per record, then `{"summary": ..., "coverage": ...}`.
pub fn write_jsonl<W: Write>(out: &mut W, outcome: &SweepOutcome) -> io::Result<()> {
    for record in &outcome.records {
        serde_json::to_writer(&mut *out, record)?;
        out.write_all(b"\n")?;
    }
    let line = SummaryLine {
        summary: &outcome.summary,
        coverage: outcome.summary.coverage(),
    };
    serde_json::to_writer(&mut *out, &line)?;
    out.write_all(b"\n")
}

pub fn write_text<W: Write>(out: &mut W, outcome: &SweepOutcome) -> io::Result<()> {
    for record in &outcome.records {
        writeln!(out, "{record}")?;
    }
    let s = &outcome.summary;
    writeln!(
        out,
        "{} over {}: {} shapes, {} families checked, {} covered; holds {}, equality {}, violated {}",
        s.check, s.domain, s.shapes, s.families_checked, s.families_covered, s.holds, s.equality, s.violated
    )?;
    writeln!(out, "coverage: {}", s.coverage())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{sweep, Check, SweepConfig, SweepDomain};
    use crate::domain::PrimeModulus;

    #[test]
    fn jsonl_ends_with_summary() {
        let mut cfg = SweepConfig::new(Check::TheoremOddL, SweepDomain::Prime(PrimeModulus::new(5).unwrap()));
        cfg.n_range = (3, 3);
        cfg.size_range = (2, 2);
        let outcome = sweep(&cfg).unwrap();
        let mut buf = Vec::new();
        write_jsonl(&mut buf, &outcome).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let last = text.lines().last().unwrap();
        let value: serde_json::Value = serde_json::from_str(last).unwrap();
        assert_eq!(value["summary"]["violated"], 0);
        assert_eq!(value["summary"]["families_covered"], 1000);
        assert!(value["coverage"].as_str().unwrap().starts_with("exhaustive"));
    }
}
