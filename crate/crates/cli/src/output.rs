//! Run manifests, JSON reports and CSV rows.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::path::Path;
use std::time::Duration;

use anyhow::{Context, Result};
use chrono::{DateTime, SecondsFormat, Utc};
use serde::Serialize;

/// Set to a Unix time to pin timestamps and zero all timings, so that
/// repeated runs write identical files.
pub const EPOCH_VAR: &str = "SOURCE_DATE_EPOCH";

fn pinned_epoch() -> Option<i64> {
    std::env::var(EPOCH_VAR).ok()?.trim().parse().ok()
}

/// `d`, or zero when timings are pinned.
pub fn timing(d: Duration) -> Duration {
    if pinned_epoch().is_some() {
        Duration::ZERO
    } else {
        d
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub arguments: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub tool_version: String,
    pub timestamp: String,
}

impl RunManifest {
    pub fn new(command: &str, arguments: BTreeMap<String, String>, seed: Option<u64>) -> Self {
        let now = match pinned_epoch() {
            Some(secs) => DateTime::<Utc>::from_timestamp(secs, 0).unwrap_or_default(),
            None => Utc::now(),
        };
        RunManifest {
            command: command.to_string(),
            arguments,
            seed,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: now.to_rfc3339_opts(SecondsFormat::Secs, true),
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    manifest: &'a RunManifest,
    report: &'a T,
}

pub fn write_report<T: Serialize>(path: &Path, manifest: &RunManifest, report: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(&Envelope { manifest, report })?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

pub const CSV_HEADER: [&str; 7] = ["class", "n", "param_g", "seed", "size", "verified", "elapsed_ms"];

#[derive(Debug, Clone, Serialize)]
pub struct CsvRow {
    pub class: String,
    pub n: Option<u32>,
    pub param_g: Option<u64>,
    pub seed: Option<u64>,
    pub size: Option<u64>,
    pub verified: bool,
    pub elapsed_ms: f64,
}

impl CsvRow {
    pub fn elapsed(d: Duration) -> f64 {
        timing(d).as_secs_f64() * 1000.0
    }
}

/// Writes `rows` to a new file with a header.
pub fn write_csv(path: &Path, rows: &[CsvRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

/// Appends rows, adding the header when the file is new or empty.
pub fn append_csv(path: &Path, rows: &[CsvRow]) -> Result<()> {
    let fresh = fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
    let file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("opening {}", path.display()))?;
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(file);
    if fresh {
        w.write_record(CSV_HEADER)?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}
