//! Deterministic JSON reports and CSV tables. Anything time-dependent
//! (runtimes, wall-clock stamps) goes into a separate metadata file so that
//! identical configurations produce byte-identical reports.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    /// Check id; maps 1:1 to an acceptance criterion of the verification plan.
    pub id: String,
    /// The inequality or reference value being checked, as data.
    pub reference: Value,
    /// What was measured.
    pub measured: Value,
    pub pass: bool,
}

#[derive(Default)]
pub struct SuiteOutcome {
    pub reports: Vec<CheckReport>,
    pub runtimes_ms: BTreeMap<String, u128>,
}

impl SuiteOutcome {
    pub fn pass(&self) -> bool {
        self.reports.iter().all(|r| r.pass)
    }
}

/// One JSON file per check, a summary, and a metadata file with runtimes and
/// a wall-clock stamp.
pub fn write_reports(out_dir: &Path, outcome: &SuiteOutcome) -> io::Result<()> {
    fs::create_dir_all(out_dir)?;
    for r in &outcome.reports {
        let path = out_dir.join(format!("{}.json", r.id));
        fs::write(path, serde_json::to_string_pretty(r)?)?;
    }
    let summary: Vec<Value> = outcome
        .reports
        .iter()
        .map(|r| serde_json::json!({"id": r.id, "pass": r.pass}))
        .collect();
    fs::write(
        out_dir.join("summary.json"),
        serde_json::to_string_pretty(&serde_json::json!({
            "pass": outcome.pass(),
            "checks": summary,
        }))?,
    )?;
    let stamp = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    fs::write(
        out_dir.join("metadata.json"),
        serde_json::to_string_pretty(&serde_json::json!({
            "unix_time": stamp,
            "runtimes_ms": outcome.runtimes_ms,
        }))?,
    )?;
    Ok(())
}

/// Write a (n, i, dim) homology table as CSV.
pub fn write_dim_table(
    path: &Path,
    header: &[&str],
    rows: &[Vec<String>],
) -> Result<(), Box<dyn std::error::Error>> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}
