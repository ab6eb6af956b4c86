//! Command-line front end. Exit status contract: 0 = all checks passed,
//! 1 = a checked claim failed, 2 = usage or configuration error,
//! 3 = I/O error.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use crate::cache::WindowCache;
use crate::error::{Error, Result};
use crate::report::{self, OutputFormat};
use crate::sieve::{self, DEFAULT_SEGMENT_SIZE};
use crate::verifier::{self, WindowReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CLAIM_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// Largest integer the trial-division oracle is allowed to scan to.
pub const ORACLE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Parser)]
#[command(name = "twinsieve", version, about = "Twin-pair sieve, estimator tables, and claim audits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Worker threads for parallel sieving (default: all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,

    /// Sieve segment size in odd slots; power of two, at least 2^16.
    #[arg(long, global = true, default_value_t = DEFAULT_SEGMENT_SIZE)]
    pub segment_size: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit estimator table rows 1..=n_max.
    Table {
        #[arg(long, default_value_t = 50)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Compare computed rows against the golden reference table.
    VerifyTable2 {
        #[arg(long, default_value_t = 50)]
        n_max: u64,
        /// Fixture path; defaults to the embedded copy.
        #[arg(long)]
        fixture: Option<PathBuf>,
    },
    /// Count twins in each incremental window 0..=n_max.
    Windows {
        #[arg(long, default_value_t = 50)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Minimum twin count a window must meet.
        #[arg(long, default_value_t = 3)]
        min: u64,
        /// Append-only NDJSON cache of window counts.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Audit the claimed inequalities and report case frequencies.
    Audit {
        #[arg(long, default_value_t = 50)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Cross-check sieve twin counts against the trial-division oracle.
    OracleCompare {
        #[arg(long, default_value_t = 50)]
        n_max: u64,
    },
    /// Write an SVG trend chart of the tpa / tpe / tpe_s series.
    Plot {
        #[arg(long, default_value_t = 50)]
        n_max: u64,
        /// Output SVG path.
        #[arg(short, long)]
        output: PathBuf,
    },
}

fn validate_segment_size(segment_size: usize) -> Result<()> {
    if segment_size < (1 << 16) || !segment_size.is_power_of_two() {
        return Err(Error::Usage(format!(
            "segment size must be a power of two >= 65536, got {segment_size}"
        )));
    }
    Ok(())
}

fn require_positive(n_max: u64, what: &str) -> Result<()> {
    if n_max < 1 {
        return Err(Error::Usage(format!("{what} requires --n-max >= 1")));
    }
    Ok(())
}

/// Execute a parsed command, writing reports to `out`. Returns true iff
/// every checked claim held.
pub fn execute(cli: &Cli, out: &mut impl Write) -> Result<bool> {
    validate_segment_size(cli.segment_size)?;
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(Error::Usage("--workers must be >= 1".into()));
        }
        // First builder wins; later calls keep the existing pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    match &cli.command {
        Command::Table { n_max, format } => {
            require_positive(*n_max, "table")?;
            let rows = verifier::table_rows(*n_max)?;
            report::render_table(&rows, *format, out)?;
            Ok(true)
        }
        Command::VerifyTable2 { n_max, fixture } => {
            require_positive(*n_max, "verify-table2")?;
            let golden = match fixture {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        Error::Config(format!("cannot read fixture {}: {e}", path.display()))
                    })?;
                    verifier::parse_golden(&text)?
                }
                None => verifier::parse_golden(verifier::EMBEDDED_TABLE2)?,
            };
            let mismatches = verifier::reproduce_table2_against(*n_max, &golden)?;
            if mismatches.is_empty() {
                writeln!(out, "table2: all {} rows match", (*n_max).min(golden.len() as u64))?;
                Ok(true)
            } else {
                for m in &mismatches {
                    writeln!(
                        out,
                        "mismatch at n={} column {}: expected {}, computed {}",
                        m.n, m.column, m.expected, m.actual
                    )?;
                }
                Ok(false)
            }
        }
        Command::Windows { n_max, format, min, cache } => {
            let reports = windows_with_cache(*n_max, *min, cli.segment_size, cache.as_deref())?;
            report::render_windows(&reports, *format, out)?;
            let violations: Vec<u64> =
                reports.iter().filter(|w| !w.meets_threshold).map(|w| w.n).collect();
            if violations.is_empty() {
                Ok(true)
            } else {
                writeln!(out, "windows below threshold {min}: {violations:?}")?;
                Ok(false)
            }
        }
        Command::Audit { n_max, format } => {
            require_positive(*n_max, "audit")?;
            let audit = verifier::audit_claims(*n_max)?;
            report::render_audit(&audit, *format, out)?;
            Ok(audit.clean())
        }
        Command::OracleCompare { n_max } => {
            require_positive(*n_max, "oracle-compare")?;
            let limit = verifier::range_limit(*n_max);
            if limit > ORACLE_LIMIT {
                return Err(Error::Usage(format!(
                    "oracle-compare needs (6*n_max+5)^2 <= {ORACLE_LIMIT}; n_max {n_max} gives {limit}"
                )));
            }
            let results: Vec<(u64, u64, u64)> = (1..=*n_max)
                .into_par_iter()
                .map(|n| {
                    let l = verifier::range_limit(n);
                    let sieved = sieve::twin_count_in_with(5, l, DEFAULT_SEGMENT_SIZE)
                        .expect("valid range");
                    (n, sieved, sieve::count_twins_below_oracle(l))
                })
                .collect();
            let mut ok = true;
            for (n, sieved, oracle) in &results {
                if sieved != oracle {
                    ok = false;
                    writeln!(out, "DIVERGENCE at n={n}: sieve {sieved}, oracle {oracle}")?;
                }
            }
            if ok {
                writeln!(out, "oracle-compare: sieve and trial division agree at all {n_max} limits")?;
            }
            Ok(ok)
        }
        Command::Plot { n_max, output } => {
            if *n_max < 2 {
                return Err(Error::Usage("plot requires --n-max >= 2".into()));
            }
            let rows = verifier::table_rows(*n_max)?;
            let svg = crate::svg::render_trend(&rows);
            std::fs::write(output, svg)?;
            writeln!(out, "wrote {}", output.display())?;
            Ok(true)
        }
    }
}

fn windows_with_cache(
    n_max: u64,
    min_threshold: u64,
    segment_size: usize,
    cache_path: Option<&std::path::Path>,
) -> Result<Vec<WindowReport>> {
    let mut cache = match cache_path {
        Some(path) => match WindowCache::load(path) {
            Ok(c) => Some(c),
            Err(e) => {
                // Corrupt cache: describe it, ignore it, recompute.
                eprintln!("warning: {e}; ignoring cache");
                Some(WindowCache::empty(path))
            }
        },
        None => None,
    };
    let missing: Vec<u64> = (0..=n_max)
        .filter(|&n| cache.as_ref().is_none_or(|c| c.get(n).is_none()))
        .collect();
    let computed: Vec<(u64, u64)> = missing
        .par_iter()
        .map(|&n| {
            let count = sieve::twin_count_in_with(
                verifier::range_limit(n),
                verifier::range_limit(n + 1),
                segment_size,
            )
            .expect("window range is valid");
            (n, count)
        })
        .collect();
    if let Some(cache) = cache.as_mut() {
        for &(n, count) in &computed {
            cache.record(n, count)?;
        }
    }
    let lookup: std::collections::HashMap<u64, u64> = computed.into_iter().collect();
    Ok((0..=n_max)
        .map(|n| {
            let twin_count = lookup
                .get(&n)
                .copied()
                .or_else(|| cache.as_ref().and_then(|c| c.get(n)))
                .expect("every window is cached or computed");
            WindowReport {
                n,
                window_lo: verifier::range_limit(n),
                window_hi: verifier::range_limit(n + 1),
                twin_count,
                meets_threshold: twin_count >= min_threshold,
            }
        })
        .collect())
}

/// Map an execution outcome onto the stable exit-status contract.
pub fn exit_code(outcome: Result<bool>) -> i32 {
    match outcome {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_CLAIM_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) => EXIT_IO,
                _ => EXIT_USAGE,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String) {
        let cli = Cli::try_parse_from(args).expect("args parse");
        let mut out = Vec::new();
        let code = exit_code(execute(&cli, &mut out));
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn table_csv_shape() {
        let (code, out) = run(&["twinsieve", "table", "--n-max", "3", "--format", "csv"]);
        assert_eq!(code, EXIT_OK);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "n,range_limit,atpg,tpr_percent,tpe,tpa,tpe_s");
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[1], "1,121,19,42.86,8,9,6");
    }

    #[test]
    fn table_rejects_n_max_zero() {
        let (code, _) = run(&["twinsieve", "table", "--n-max", "0"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn verify_table2_default_passes() {
        let (code, out) = run(&["twinsieve", "verify-table2", "--n-max", "10"]);
        assert_eq!(code, EXIT_OK, "{out}");
    }

    #[test]
    fn windows_min_forced_unreachable() {
        let (code, out) = run(&["twinsieve", "windows", "--n-max", "3", "--min", "100"]);
        assert_eq!(code, EXIT_CLAIM_FAILED);
        assert!(out.contains("below threshold"));
    }

    #[test]
    fn windows_n_max_zero_is_single_window() {
        let (code, out) = run(&["twinsieve", "windows", "--n-max", "0", "--format", "csv"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("0,25,121,6,true"));
    }

    #[test]
    fn oracle_compare_small() {
        let (code, out) = run(&["twinsieve", "oracle-compare", "--n-max", "5"]);
        assert_eq!(code, EXIT_OK, "{out}");
    }

    #[test]
    fn oracle_compare_oversized() {
        let (code, _) = run(&["twinsieve", "oracle-compare", "--n-max", "100000"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn bad_segment_size() {
        let (code, _) = run(&["twinsieve", "table", "--n-max", "2", "--segment-size", "1000"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn format_equivalence() {
        let (_, csv) = run(&["twinsieve", "table", "--n-max", "5", "--format", "csv"]);
        let (_, json) = run(&["twinsieve", "table", "--n-max", "5", "--format", "json"]);
        let (_, text) = run(&["twinsieve", "table", "--n-max", "5", "--format", "text"]);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        for (i, line) in csv.lines().skip(1).enumerate() {
            let fields: Vec<&str> = line.split(',').collect();
            let row = &parsed[i];
            assert_eq!(row["n"].to_string(), fields[0]);
            assert_eq!(row["tpr_percent"].as_str().unwrap(), fields[3]);
            assert_eq!(row["tpa"].to_string(), fields[5]);
            assert!(text.contains(fields[5]));
        }
    }
}
