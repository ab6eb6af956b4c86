//! Append-only newline-delimited JSON cache for window twin counts.
//! Records are keyed by window index and tool version; a re-run with a
//! warm cache verifies cached counts instead of duplicating them.

use std::collections::HashMap;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CacheRecord {
    pub n: u64,
    pub twin_count: u64,
    /// Unix seconds at the time the count was computed.
    pub computed_at: u64,
    pub tool_version: String,
}

/// On-disk cache of window counts for the current tool version.
#[derive(Debug)]
pub struct WindowCache {
    path: PathBuf,
    counts: HashMap<u64, u64>,
}

impl WindowCache {
    /// Load the cache file, if present. Corrupt content is a described
    /// error; callers are expected to fall back to recomputing.
    pub fn load(path: &Path) -> Result<Self> {
        let mut counts = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(std::fs::File::open(path)?);
            for (i, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec: CacheRecord = serde_json::from_str(&line).map_err(|e| {
                    Error::Config(format!(
                        "cache {} line {}: malformed record: {e}",
                        path.display(),
                        i + 1
                    ))
                })?;
                if rec.tool_version != TOOL_VERSION {
                    continue;
                }
                if let Some(&prev) = counts.get(&rec.n) {
                    if prev != rec.twin_count {
                        return Err(Error::Config(format!(
                            "cache {} line {}: conflicting counts for n={} ({prev} vs {})",
                            path.display(),
                            i + 1,
                            rec.n,
                            rec.twin_count
                        )));
                    }
                } else {
                    counts.insert(rec.n, rec.twin_count);
                }
            }
        }
        Ok(WindowCache { path: path.to_path_buf(), counts })
    }

    /// Empty in-memory cache that still appends to `path`.
    pub fn empty(path: &Path) -> Self {
        WindowCache { path: path.to_path_buf(), counts: HashMap::new() }
    }

    pub fn get(&self, n: u64) -> Option<u64> {
        self.counts.get(&n).copied()
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Record a freshly computed count. A matching cached value is a
    /// no-op; a conflicting one is an error rather than a silent append.
    pub fn record(&mut self, n: u64, twin_count: u64) -> Result<()> {
        if let Some(prev) = self.get(n) {
            if prev != twin_count {
                return Err(Error::Config(format!(
                    "cache {}: recomputed count for n={n} is {twin_count}, cached {prev}",
                    self.path.display()
                )));
            }
            return Ok(());
        }
        let rec = CacheRecord {
            n,
            twin_count,
            computed_at: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            tool_version: TOOL_VERSION.to_string(),
        };
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path)?;
        writeln!(file, "{}", serde_json::to_string(&rec).expect("record serializes"))?;
        self.counts.insert(n, twin_count);
        Ok(())
    }
}
