//! Machine-readable report emission (JSON and CSV).

use std::io::Write;

use serde::Serialize;

use holobound::checks::EstimateReport;

use crate::runner::RunSummary;

/// Non-deterministic run metadata, kept in one sub-object so callers can
/// strip it before byte comparison.
#[derive(Debug, Clone, Serialize)]
pub struct ReportMeta {
    pub generated_at_unix: u64,
    pub wall_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument<'a> {
    pub meta: ReportMeta,
    pub summary: &'a RunSummary,
    pub results: &'a [EstimateReport],
}

pub fn write_json(
    out: &mut impl Write,
    summary: &RunSummary,
    results: &[EstimateReport],
    meta: ReportMeta,
) -> anyhow::Result<()> {
    let doc = ReportDocument {
        meta,
        summary,
        results,
    };
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub const CSV_COLUMNS: [&str; 12] = [
    "case_id", "check", "geometry", "n", "p", "alpha", "point", "lhs", "rhs", "ratio",
    "err_est", "verdict",
];

pub fn write_csv(out: &mut impl Write, results: &[EstimateReport]) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    for r in results {
        w.write_record([
            r.case_id.as_str(),
            r.check.as_str(),
            r.geometry.as_str(),
            &r.n.to_string(),
            &format_float(r.p),
            r.alpha.as_str(),
            r.point.as_str(),
            &format_float(r.lhs),
            &format_float(r.rhs),
            &format_float(r.ratio),
            &format_float(r.err_est),
            &r.verdict.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn format_float(v: f64) -> String {
    if v == v.trunc() && v.abs() < 1e15 {
        format!("{v}")
    } else {
        format!("{v:.12e}")
    }
}
