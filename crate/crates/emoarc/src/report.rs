//! Sweep report export: long-format CSV (one row per cell) and a JSON
//! mirror. The CSV starts with a `#` provenance line and rho is reported
//! to six decimal places; comparisons belong in tests, not in exports.

use std::fs;
use std::io::Write;
use std::path::Path;

use emoarc_core::arc::{OovPolicy, ScoringMode};
use emoarc_core::eval::EvalReport;

use crate::error::Result;

/// Which column set a report file carries. Oracle reports add an accuracy
/// column to the shared layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportKind {
    Lexo,
    Oracle,
}

fn oov_token(oov: OovPolicy) -> &'static str {
    match oov {
        OovPolicy::DropNa => "drop_na",
        OovPolicy::Zero => "zero",
    }
}

fn scoring_token(scoring: ScoringMode) -> &'static str {
    match scoring {
        ScoringMode::InstanceMean => "instance_mean",
        ScoringMode::WindowWordPool => "window_word_pool",
    }
}

fn fmt_opt<T: std::fmt::Display>(value: Option<T>) -> String {
    value.map(|v| v.to_string()).unwrap_or_default()
}

fn fmt_rho(value: Option<f64>) -> String {
    value.map(|v| format!("{v:.6}")).unwrap_or_default()
}

/// Write the long-format CSV: columns
/// `corpus,emotion,method,lexicon,granularity,oov,tau,bin,stride[,accuracy],rho,status`.
/// The granularity column carries the scoring granularity of the cell.
pub fn write_report_csv(
    reports: &[EvalReport],
    kind: ReportKind,
    path: &Path,
    provenance: &serde_json::Value,
) -> Result<()> {
    let mut out = fs::File::create(path)?;
    writeln!(out, "# {}", serde_json::to_string(provenance)?)?;
    match kind {
        ReportKind::Lexo => {
            writeln!(out, "corpus,emotion,method,lexicon,granularity,oov,tau,bin,stride,rho,status")?
        }
        ReportKind::Oracle => writeln!(
            out,
            "corpus,emotion,method,lexicon,granularity,oov,tau,bin,stride,accuracy,rho,status"
        )?,
    }
    for r in reports {
        let base = format!(
            "{},{},{},{},{},{},{},{},{}",
            r.corpus,
            r.emotion,
            r.method,
            fmt_opt(r.lexicon.as_deref()),
            fmt_opt(r.scoring.map(scoring_token)),
            fmt_opt(r.oov.map(oov_token)),
            fmt_opt(r.tau),
            r.bin,
            r.stride,
        );
        match kind {
            ReportKind::Lexo => {
                writeln!(out, "{base},{},{}", fmt_rho(r.rho), r.status.token())?
            }
            ReportKind::Oracle => writeln!(
                out,
                "{base},{},{},{}",
                fmt_opt(r.accuracy),
                fmt_rho(r.rho),
                r.status.token()
            )?,
        }
    }
    Ok(())
}

/// JSON mirror: full report structs (including rho min/max, trial counts,
/// lexicon granularity and standardization flags) under the resolved
/// run provenance.
pub fn write_report_json(
    reports: &[EvalReport],
    path: &Path,
    provenance: &serde_json::Value,
) -> Result<()> {
    let doc = serde_json::json!({
        "provenance": provenance,
        "reports": reports,
    });
    let mut out = fs::File::create(path)?;
    serde_json::to_writer_pretty(&mut out, &doc)?;
    writeln!(out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use emoarc_core::eval::CellStatus;
    use emoarc_core::lexicon::Granularity;

    fn report(bin: usize, rho: Option<f64>) -> EvalReport {
        EvalReport {
            corpus: "c".into(),
            emotion: "valence".into(),
            method: "lexo".into(),
            lexicon: Some("lex".into()),
            lexicon_granularity: Some(Granularity::Continuous),
            scoring: Some(ScoringMode::InstanceMean),
            oov: Some(OovPolicy::DropNa),
            tau: Some(0.0),
            tau_mode: None,
            bin,
            stride: 1,
            accuracy: None,
            trials: None,
            n_windows: 10,
            rho,
            rho_min: None,
            rho_max: None,
            standardized_gold: false,
            standardized_pred: false,
            status: if rho.is_some() {
                CellStatus::Ok
            } else {
                CellStatus::DegenerateArc
            },
        }
    }

    #[test]
    fn csv_layout_is_stable() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("report.csv");
        let reports = vec![report(1, Some(0.123456789)), report(10, None)];
        write_report_csv(
            &reports,
            ReportKind::Lexo,
            &path,
            &serde_json::json!({"command": "test"}),
        )
        .unwrap();
        let content = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = content.lines().collect();
        assert!(lines[0].starts_with("# {"));
        assert_eq!(
            lines[1],
            "corpus,emotion,method,lexicon,granularity,oov,tau,bin,stride,rho,status"
        );
        assert_eq!(lines[2], "c,valence,lexo,lex,instance_mean,drop_na,0,1,1,0.123457,ok");
        assert_eq!(lines[3], "c,valence,lexo,lex,instance_mean,drop_na,0,10,1,,degenerate-arc");
    }

    #[test]
    fn oracle_csv_adds_accuracy_column() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("report.csv");
        let mut r = report(100, Some(0.95));
        r.method = "oracle".into();
        r.lexicon = None;
        r.lexicon_granularity = None;
        r.scoring = None;
        r.oov = None;
        r.tau = None;
        r.accuracy = Some(0.6);
        r.trials = Some(20);
        write_report_csv(&[r], ReportKind::Oracle, &path, &serde_json::json!({}))
            .unwrap();
        let content = std::fs::read_to_string(&path).unwrap();
        let lines: Vec<&str> = content.lines().collect();
        assert_eq!(
            lines[1],
            "corpus,emotion,method,lexicon,granularity,oov,tau,bin,stride,accuracy,rho,status"
        );
        assert_eq!(lines[2], "c,valence,oracle,,,,,100,1,0.6,0.950000,ok");
    }
}
