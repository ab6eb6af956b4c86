//! Rendering of table rows, window reports, and audits as text, CSV,
//! or JSON. All three formats carry the same numeric values; JSON rows
//! additionally carry the retention ratio as exact num/den strings.

use std::io::{self, Write};

use serde_json::json;

use crate::verifier::{ClaimAudit, EstimateRow, WindowReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Text,
}

/// 2-decimal percent value without the trailing sign, for csv/json.
fn percent_number(row: &EstimateRow) -> String {
    row.tpr_percent.trim_end_matches('%').to_string()
}

pub fn render_table(rows: &[EstimateRow], fmt: OutputFormat, out: &mut impl Write) -> io::Result<()> {
    match fmt {
        OutputFormat::Csv => {
            writeln!(out, "n,range_limit,atpg,tpr_percent,tpe,tpa,tpe_s")?;
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.n,
                    r.range_limit,
                    r.atpg,
                    percent_number(r),
                    r.tpe_display,
                    r.tpa,
                    r.tpe_s
                )?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "range_limit": r.range_limit,
                        "atpg": r.atpg,
                        "tpr_percent": percent_number(r),
                        "tpe": r.tpe_display,
                        "tpa": r.tpa,
                        "tpe_s": r.tpe_s,
                        "tpr": {
                            "num": r.tpr.numer().to_string(),
                            "den": r.tpr.denom().to_string(),
                        },
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        }
        OutputFormat::Text => {
            writeln!(
                out,
                "{:>4} {:>12} {:>8} {:>8} {:>6} {:>6} {:>6}",
                "n", "range", "atpg", "tpr", "tpe", "tpa", "tpe_s"
            )?;
            for r in rows {
                writeln!(
                    out,
                    "{:>4} {:>12} {:>8} {:>8} {:>6} {:>6} {:>6}",
                    r.n, r.range_limit, r.atpg, r.tpr_percent, r.tpe_display, r.tpa, r.tpe_s
                )?;
            }
        }
    }
    Ok(())
}

pub fn render_windows(
    reports: &[WindowReport],
    fmt: OutputFormat,
    out: &mut impl Write,
) -> io::Result<()> {
    match fmt {
        OutputFormat::Csv => {
            writeln!(out, "n,window_lo,window_hi,twin_count,meets_threshold")?;
            for w in reports {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    w.n, w.window_lo, w.window_hi, w.twin_count, w.meets_threshold
                )?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = reports
                .iter()
                .map(|w| {
                    json!({
                        "n": w.n,
                        "window_lo": w.window_lo,
                        "window_hi": w.window_hi,
                        "twin_count": w.twin_count,
                        "meets_threshold": w.meets_threshold,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
        }
        OutputFormat::Text => {
            writeln!(
                out,
                "{:>5} {:>12} {:>12} {:>6} ok",
                "n", "window_lo", "window_hi", "twins"
            )?;
            for w in reports {
                writeln!(
                    out,
                    "{:>5} {:>12} {:>12} {:>6} {}",
                    w.n,
                    w.window_lo,
                    w.window_hi,
                    w.twin_count,
                    if w.meets_threshold { "yes" } else { "NO" }
                )?;
            }
        }
    }
    Ok(())
}

pub fn render_audit(audit: &ClaimAudit, fmt: OutputFormat, out: &mut impl Write) -> io::Result<()> {
    match fmt {
        OutputFormat::Json => {
            let doc = json!({
                "n_max": audit.n_max,
                "tpe_le_tpa_violations": audit.tpe_le_tpa_violations,
                "window_violations": audit.window_violations,
                "ordering_violations": audit.ordering_violations,
                "case_histogram": {
                    "case_i": audit.case_histogram[0],
                    "case_ii": audit.case_histogram[1],
                    "case_iii": audit.case_histogram[2],
                    "case_iv": audit.case_histogram[3],
                },
                "clean": audit.clean(),
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        _ => {
            writeln!(out, "claim audit up to n = {}", audit.n_max)?;
            writeln!(
                out,
                "  round(tpe) <= tpa violations: {:?}",
                audit.tpe_le_tpa_violations
            )?;
            writeln!(out, "  window threshold violations:  {:?}", audit.window_violations)?;
            writeln!(out, "  ordering violations:          {:?}", audit.ordering_violations)?;
            let h = audit.case_histogram;
            writeln!(
                out,
                "  case histogram: I={} II={} III={} IV={} (total {})",
                h[0],
                h[1],
                h[2],
                h[3],
                h.iter().sum::<u64>()
            )?;
            writeln!(out, "  verdict: {}", if audit.clean() { "clean" } else { "VIOLATIONS" })?;
        }
    }
    Ok(())
}
