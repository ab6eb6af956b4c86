//! End-to-end reproduction of the reference measurement table, window
//! audits for the at-least-3-twins-per-window claim, and case-frequency
//! reporting against the conservative assumption.

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::atp::{atpg_count, AtpPair, CaseKind};
use crate::error::{Error, Result};
use crate::estimator::TprAccumulator;
use crate::ratio::{self, ExactRatio};
use crate::sieve;

/// Golden copy of the reference table, shipped verbatim (thousands
/// separators and percent strings included).
pub const EMBEDDED_TABLE2: &str = include_str!("../data/table2.tsv");

/// The minimum twin count per incremental window claimed by the model.
pub const WINDOW_THRESHOLD: u64 = 3;

/// Boundary of the n-th incremental range.
pub fn range_limit(n: u64) -> u64 {
    (6 * n + 5) * (6 * n + 5)
}

/// One row of the measurement table.
#[derive(Debug, Clone)]
pub struct EstimateRow {
    pub n: u64,
    pub range_limit: u64,
    pub atpg: u64,
    pub tpr: ExactRatio,
    /// Floating view of atpg * tpr.
    pub tpe: f64,
    /// Nearest-integer display value of tpe (ties away from zero).
    pub tpe_display: u64,
    /// tpr as a 2-decimal percent string.
    pub tpr_percent: String,
    /// Actual twin pairs below range_limit.
    pub tpa: u64,
    /// Simplified bound 3n + 3.
    pub tpe_s: u64,
}

fn row_from_parts(n: u64, tpr: ExactRatio, tpa: u64) -> EstimateRow {
    let atpg = atpg_count(n);
    let tpe_exact = &tpr * num_bigint::BigInt::from(atpg);
    EstimateRow {
        n,
        range_limit: range_limit(n),
        atpg,
        tpe: ratio::to_f64(&tpe_exact),
        tpe_display: ratio::round_half_away(&tpe_exact).to_u64().expect("positive"),
        tpr_percent: ratio::percent_2dp(&tpr),
        tpr,
        tpa,
        tpe_s: 3 * n + 3,
    }
}

/// Compute a single table row. For many rows prefer [`table_rows`],
/// which sieves the twin counts once.
pub fn table_row(n: u64) -> Result<EstimateRow> {
    if n < 1 {
        return Err(Error::Domain("table rows start at n = 1".into()));
    }
    let tpr = crate::estimator::tpr_ab(n)?;
    let tpa = sieve::twin_count_in(5, range_limit(n))?;
    Ok(row_from_parts(n, tpr, tpa))
}

/// Rows 1..=n_max, with one sieve pass shared across all rows.
pub fn table_rows(n_max: u64) -> Result<Vec<EstimateRow>> {
    if n_max < 1 {
        return Err(Error::Domain("table rows start at n = 1".into()));
    }
    let pairs = sieve::twin_pairs_in(5, range_limit(n_max))?;
    let seconds: Vec<u64> = pairs.iter().map(|p| p.b).collect();
    let mut acc = TprAccumulator::new();
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        acc.step();
        let tpa = seconds.partition_point(|&b| b < range_limit(n)) as u64;
        rows.push(row_from_parts(n, acc.to_ratio(), tpa));
    }
    Ok(rows)
}

/// A row of the golden fixture, kept as printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRow {
    pub n: u64,
    pub range_limit: u64,
    pub atpg: u64,
    pub tpr_percent: String,
    pub tpe: u64,
    pub tpa: u64,
    pub tpe_s: u64,
}

fn parse_int(field: &str, line: usize) -> Result<u64> {
    field
        .replace(',', "")
        .parse()
        .map_err(|_| Error::Config(format!("fixture line {line}: bad integer {field:?}")))
}

/// Parse the tab-separated golden fixture (header line first).
pub fn parse_golden(text: &str) -> Result<Vec<GoldenRow>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 7 {
            return Err(Error::Config(format!(
                "fixture line {}: expected 7 tab-separated columns, got {}",
                i + 1,
                fields.len()
            )));
        }
        rows.push(GoldenRow {
            n: parse_int(fields[0], i + 1)?,
            range_limit: parse_int(fields[1], i + 1)?,
            atpg: parse_int(fields[2], i + 1)?,
            tpr_percent: fields[3].trim().to_string(),
            tpe: parse_int(fields[4], i + 1)?,
            tpa: parse_int(fields[5], i + 1)?,
            tpe_s: parse_int(fields[6], i + 1)?,
        });
    }
    if rows.is_empty() {
        return Err(Error::Config("fixture contains no data rows".into()));
    }
    Ok(rows)
}

/// A computed cell that disagrees with the golden fixture.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    pub column: &'static str,
    pub expected: String,
    pub actual: String,
}

/// Compare computed rows 1..=n_max against the embedded golden table.
pub fn reproduce_table2(n_max: u64) -> Result<Vec<Mismatch>> {
    reproduce_table2_against(n_max, &parse_golden(EMBEDDED_TABLE2)?)
}

pub fn reproduce_table2_against(n_max: u64, golden: &[GoldenRow]) -> Result<Vec<Mismatch>> {
    let n_max = n_max.min(golden.len() as u64);
    if n_max < 1 {
        return Err(Error::Domain("need at least one row to compare".into()));
    }
    let rows = table_rows(n_max)?;
    let mut mismatches = Vec::new();
    for (row, gold) in rows.iter().zip(golden) {
        debug_assert_eq!(row.n, gold.n);
        let mut check = |column, expected: String, actual: String| {
            if expected != actual {
                mismatches.push(Mismatch { n: row.n, column, expected, actual });
            }
        };
        check("range", gold.range_limit.to_string(), row.range_limit.to_string());
        check("atpg", gold.atpg.to_string(), row.atpg.to_string());
        check("tpr", gold.tpr_percent.clone(), row.tpr_percent.clone());
        check("tpe", gold.tpe.to_string(), row.tpe_display.to_string());
        check("tpa", gold.tpa.to_string(), row.tpa.to_string());
        check("tpe_s", gold.tpe_s.to_string(), row.tpe_s.to_string());
    }
    Ok(mismatches)
}

/// Twin count for one incremental window `[(6n+5)^2, (6(n+1)+5)^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowReport {
    pub n: u64,
    pub window_lo: u64,
    pub window_hi: u64,
    pub twin_count: u64,
    pub meets_threshold: bool,
}

pub fn window_report(n: u64) -> Result<WindowReport> {
    window_report_with(n, WINDOW_THRESHOLD, sieve::DEFAULT_SEGMENT_SIZE)
}

pub fn window_report_with(n: u64, min_threshold: u64, segment_size: usize) -> Result<WindowReport> {
    let window_lo = range_limit(n);
    let window_hi = range_limit(n + 1);
    let twin_count = sieve::twin_count_in_with(window_lo, window_hi, segment_size)?;
    Ok(WindowReport {
        n,
        window_lo,
        window_hi,
        twin_count,
        meets_threshold: twin_count >= min_threshold,
    })
}

/// Reports for windows 0..=n_max, computed in parallel, ascending.
pub fn window_reports(n_max: u64, min_threshold: u64) -> Result<Vec<WindowReport>> {
    (0..=n_max)
        .into_par_iter()
        .map(|n| window_report_with(n, min_threshold, sieve::DEFAULT_SEGMENT_SIZE))
        .collect()
}

/// Outcome of auditing the model's empirical claims up to n_max.
#[derive(Debug, Clone)]
pub struct ClaimAudit {
    pub n_max: u64,
    /// n where round(tpe(n)) > tpa(n).
    pub tpe_le_tpa_violations: Vec<u64>,
    /// n whose window holds fewer than 3 twins.
    pub window_violations: Vec<u64>,
    /// n where tpa >= round(tpe) >= tpe_s fails.
    pub ordering_violations: Vec<u64>,
    /// Case I-IV counts over all pair indices below (6*n_max+5)^2.
    pub case_histogram: [u64; 4],
}

impl ClaimAudit {
    pub fn clean(&self) -> bool {
        self.tpe_le_tpa_violations.is_empty()
            && self.window_violations.is_empty()
            && self.ordering_violations.is_empty()
    }
}

pub fn audit_claims(n_max: u64) -> Result<ClaimAudit> {
    if n_max < 1 {
        return Err(Error::Domain("audit requires n_max >= 1".into()));
    }
    let rows = table_rows(n_max)?;
    let mut tpe_le_tpa = Vec::new();
    let mut ordering = Vec::new();
    for row in &rows {
        if row.tpe_display > row.tpa {
            tpe_le_tpa.push(row.n);
        }
        if !(row.tpa >= row.tpe_display && row.tpe_display >= row.tpe_s) {
            ordering.push(row.n);
        }
    }
    let window_violations: Vec<u64> = window_reports(n_max, WINDOW_THRESHOLD)?
        .into_iter()
        .filter(|w| !w.meets_threshold)
        .map(|w| w.n)
        .collect();
    Ok(ClaimAudit {
        n_max,
        tpe_le_tpa_violations: tpe_le_tpa,
        window_violations,
        ordering_violations: ordering,
        case_histogram: case_histogram(n_max)?,
    })
}

/// Case I-IV counts over every pair index k with 6k+1 < (6*n_max+5)^2.
pub fn case_histogram(n_max: u64) -> Result<[u64; 4]> {
    let limit = range_limit(n_max);
    let k_max = atpg_count(n_max);
    let base = sieve::primes_up_to(sieve::isqrt(limit - 1).max(2))?;
    let chunk = (sieve::DEFAULT_SEGMENT_SIZE as u64 / 3).max(1);
    let starts: Vec<u64> = (1..=k_max).step_by(chunk as usize).collect();
    let hist = starts
        .par_iter()
        .map(|&ka| {
            let kb = (ka + chunk - 1).min(k_max);
            let map = sieve::sieve_segment(6 * ka - 1, 6 * kb + 2, &base).expect("valid segment");
            let mut h = [0u64; 4];
            for k in ka..=kb {
                let pair = AtpPair { index: k, a: 6 * k - 1, b: 6 * k + 1 };
                let kind = crate::atp::classify(pair, |x| map.query(x));
                let slot = CaseKind::ALL.iter().position(|&c| c == kind).unwrap();
                h[slot] += 1;
            }
            h
        })
        .reduce(
            || [0u64; 4],
            |mut a, b| {
                for i in 0..4 {
                    a[i] += b[i];
                }
                a
            },
        );
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_n1() {
        let r = table_row(1).unwrap();
        assert_eq!(
            (r.range_limit, r.atpg, r.tpr_percent.as_str(), r.tpe_display, r.tpa, r.tpe_s),
            (121, 19, "42.86%", 8, 9, 6)
        );
    }

    #[test]
    fn row_n25() {
        let r = table_row(25).unwrap();
        assert_eq!(
            (r.range_limit, r.atpg, r.tpr_percent.as_str(), r.tpe_display, r.tpa, r.tpe_s),
            (24025, 4003, "6.07%", 243, 401, 78)
        );
    }

    #[test]
    fn batch_rows_match_single_rows() {
        let rows = table_rows(12).unwrap();
        for n in [1u64, 7, 12] {
            let single = table_row(n).unwrap();
            let batch = &rows[(n - 1) as usize];
            assert_eq!(batch.tpa, single.tpa);
            assert_eq!(batch.tpr, single.tpr);
            assert_eq!(batch.tpe_display, single.tpe_display);
        }
    }

    #[test]
    fn golden_fixture_parses() {
        let rows = parse_golden(EMBEDDED_TABLE2).unwrap();
        assert_eq!(rows.len(), 50);
        assert_eq!(rows[0].tpa, 9);
        assert_eq!(rows[49].atpg, 15503);
        assert_eq!(rows[4].range_limit, 1225); // "1,225" in the file
    }

    #[test]
    fn reproduce_single_row() {
        assert!(reproduce_table2(1).unwrap().is_empty());
    }

    #[test]
    fn corrupted_fixture_is_reported() {
        let mut golden = parse_golden(EMBEDDED_TABLE2).unwrap();
        golden[4].tpa = 999;
        let mismatches = reproduce_table2_against(10, &golden).unwrap();
        assert_eq!(mismatches.len(), 1);
        assert_eq!(mismatches[0].n, 5);
        assert_eq!(mismatches[0].column, "tpa");
    }

    #[test]
    fn window_zero() {
        let w = window_report(0).unwrap();
        assert_eq!((w.window_lo, w.window_hi, w.twin_count), (25, 121, 6));
        assert!(w.meets_threshold);
    }

    #[test]
    fn window_one_and_fortynine() {
        assert_eq!(window_report(1).unwrap().twin_count, 9);
        assert_eq!(window_report(49).unwrap().twin_count, 39);
    }

    #[test]
    fn windows_tile_the_line() {
        // 3 initial pairs below 25, plus windows 0..n-1, equals tpa(n).
        let windows = window_reports(9, WINDOW_THRESHOLD).unwrap();
        let mut total = 3u64;
        for n in 1..=10u64 {
            total = 3 + windows[..n as usize].iter().map(|w| w.twin_count).sum::<u64>();
            assert_eq!(total, sieve::twin_count_in(5, range_limit(n)).unwrap());
        }
        assert!(total > 3);
    }

    #[test]
    fn audit_to_ten_is_clean() {
        let audit = audit_claims(10).unwrap();
        assert!(audit.clean());
        assert_eq!(audit.case_histogram.iter().sum::<u64>(), atpg_count(10));
        // Case I pairs are exactly the twins below the limit.
        assert_eq!(
            audit.case_histogram[0],
            sieve::twin_count_in(5, range_limit(10)).unwrap()
        );
    }
}
