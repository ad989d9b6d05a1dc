//! Arc serialization: CSV with `window_start,score` rows plus a JSON
//! sidecar (`<path>.json`) carrying the full configuration provenance.
//! A leading `#` comment line in the CSV repeats the provenance so the
//! file is self-describing on its own.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use emoarc_core::arc::EmotionArc;

use crate::error::{Error, Result};

/// Sidecar path of an arc CSV: the CSV path with `.json` appended.
pub fn sidecar_path(csv_path: &Path) -> PathBuf {
    let mut os = csv_path.as_os_str().to_owned();
    os.push(".json");
    PathBuf::from(os)
}

/// Write the arc CSV and its JSON sidecar. Scores keep full precision
/// (shortest round-trip formatting).
pub fn write_arc_csv(
    arc: &EmotionArc,
    path: &Path,
    provenance: &serde_json::Value,
) -> Result<()> {
    let mut out = fs::File::create(path)?;
    writeln!(out, "# {}", serde_json::to_string(provenance)?)?;
    writeln!(out, "window_start,score")?;
    for (start, value) in arc.window_starts().iter().zip(arc.values()) {
        writeln!(out, "{start},{value}")?;
    }

    let sidecar = serde_json::json!({
        "provenance": provenance,
        "config": arc.config(),
        "standardized": arc.is_standardized(),
        "n_windows": arc.len(),
    });
    let mut side = fs::File::create(sidecar_path(path))?;
    serde_json::to_writer_pretty(&mut side, &sidecar)?;
    writeln!(side)?;
    Ok(())
}

/// Read back the `(window_start, score)` series of an arc CSV, ignoring
/// `#` comment lines.
pub fn read_arc_series(path: &Path) -> Result<(Vec<usize>, Vec<f64>)> {
    let content = fs::read_to_string(path)?;
    let mut starts = Vec::new();
    let mut values = Vec::new();
    let mut seen_header = false;
    for (i, raw) in content.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        let lineno = i + 1;
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        if !seen_header {
            seen_header = true;
            if line.trim() == "window_start,score" {
                continue;
            }
            // headerless files are accepted; fall through and parse
        }
        let mut fields = line.split(',');
        let (start, score) = match (fields.next(), fields.next(), fields.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    path: path.to_path_buf(),
                    line: lineno,
                    message: "expected two comma-separated columns".into(),
                })
            }
        };
        let start: usize = start.trim().parse().map_err(|_| Error::Parse {
            path: path.to_path_buf(),
            line: lineno,
            message: format!("unparseable window_start {start:?}"),
        })?;
        let score: f64 = score.trim().parse().map_err(|_| Error::Parse {
            path: path.to_path_buf(),
            line: lineno,
            message: format!("unparseable score {score:?}"),
        })?;
        starts.push(start);
        values.push(score);
    }
    Ok((starts, values))
}
