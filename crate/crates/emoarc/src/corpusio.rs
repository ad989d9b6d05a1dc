//! Labeled corpus ingestion: TSV/CSV with a header row, or JSONL.
//!
//! The column mapping names the text and label columns (plus optional id
//! and timestamp columns); the same mapping keys select JSONL fields. The
//! delimiter follows the file extension: `.csv` is comma-separated,
//! everything else tab-separated; `.jsonl`/`.ndjson` is one JSON object
//! per line. Malformed rows abort the load — silently skipping them would
//! bias arcs.

use std::fs;
use std::io::Write;
use std::path::Path;

use emoarc_core::corpus::{Instance, LabelScheme, LabeledCorpus, OrderPolicy};

use crate::error::{Error, Result};

/// Which columns (or JSONL fields) hold each instance part.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ColumnMapping {
    pub text: String,
    pub label: String,
    pub id: Option<String>,
    pub timestamp: Option<String>,
}

impl Default for ColumnMapping {
    fn default() -> Self {
        ColumnMapping {
            text: "text".into(),
            label: "label".into(),
            id: None,
            timestamp: None,
        }
    }
}

fn parse_error(path: &Path, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_path_buf(),
        line,
        message: message.into(),
    }
}

fn missing_column(path: &Path, column: &str) -> Error {
    Error::MissingColumn {
        path: path.to_path_buf(),
        column: column.to_string(),
    }
}

fn parse_label(path: &Path, line: usize, raw: &str) -> Result<f64> {
    let value: f64 = raw
        .trim()
        .parse()
        .map_err(|_| parse_error(path, line, format!("unparseable label {raw:?}")))?;
    if !value.is_finite() {
        return Err(parse_error(path, line, format!("non-finite label {raw:?}")));
    }
    Ok(value)
}

fn parse_timestamp(path: &Path, line: usize, raw: &str) -> Result<f64> {
    let value: f64 = raw
        .trim()
        .parse()
        .map_err(|_| parse_error(path, line, format!("unparseable timestamp {raw:?}")))?;
    if !value.is_finite() {
        return Err(parse_error(path, line, format!("non-finite timestamp {raw:?}")));
    }
    Ok(value)
}

fn load_delimited(path: &Path, mapping: &ColumnMapping, delimiter: u8) -> Result<Vec<Instance>> {
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(delimiter)
        .has_headers(true)
        .flexible(false)
        .from_path(path)?;
    let headers = reader.headers().map_err(|e| {
        parse_error(path, 1, e.to_string())
    })?.clone();
    let col = |name: &str| -> Result<usize> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| missing_column(path, name))
    };
    let text_col = col(&mapping.text)?;
    let label_col = col(&mapping.label)?;
    let id_col = mapping.id.as_deref().map(col).transpose()?;
    let ts_col = mapping.timestamp.as_deref().map(col).transpose()?;

    let mut instances = Vec::new();
    for (row_index, record) in reader.records().enumerate() {
        let line = row_index + 2; // header occupies line 1
        let record = record.map_err(|e| parse_error(path, line, e.to_string()))?;
        let text = record
            .get(text_col)
            .ok_or_else(|| parse_error(path, line, "short row"))?
            .to_string();
        let gold = parse_label(path, line, record.get(label_col).unwrap_or(""))?;
        let id = match id_col {
            Some(c) => record
                .get(c)
                .ok_or_else(|| parse_error(path, line, "short row"))?
                .to_string(),
            None => row_index.to_string(),
        };
        let timestamp = match ts_col {
            Some(c) => Some(parse_timestamp(path, line, record.get(c).unwrap_or(""))?),
            None => None,
        };
        instances.push(Instance::new(id, text, gold, timestamp));
    }
    Ok(instances)
}

fn load_jsonl(path: &Path, mapping: &ColumnMapping) -> Result<Vec<Instance>> {
    let content = fs::read_to_string(path)?;
    let mut instances = Vec::new();
    for (i, line) in content.lines().enumerate() {
        let lineno = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let value: serde_json::Value = serde_json::from_str(line)
            .map_err(|e| parse_error(path, lineno, e.to_string()))?;
        let field = |name: &str| -> Result<&serde_json::Value> {
            value
                .get(name)
                .ok_or_else(|| parse_error(path, lineno, format!("missing field {name:?}")))
        };
        let text = field(&mapping.text)?
            .as_str()
            .ok_or_else(|| parse_error(path, lineno, "text field is not a string"))?
            .to_string();
        let gold = {
            let v = field(&mapping.label)?;
            match (v.as_f64(), v.as_str()) {
                (Some(x), _) => x,
                (None, Some(s)) => parse_label(path, lineno, s)?,
                _ => return Err(parse_error(path, lineno, "label field is not numeric")),
            }
        };
        let id = match &mapping.id {
            Some(name) => {
                let v = field(name)?;
                v.as_str()
                    .map(str::to_string)
                    .or_else(|| v.as_i64().map(|x| x.to_string()))
                    .ok_or_else(|| parse_error(path, lineno, "id field is not a string"))?
            }
            None => i.to_string(),
        };
        let timestamp = match &mapping.timestamp {
            Some(name) => Some(
                field(name)?
                    .as_f64()
                    .ok_or_else(|| parse_error(path, lineno, "timestamp field is not numeric"))?,
            ),
            None => None,
        };
        instances.push(Instance::new(id, text, gold, timestamp));
    }
    Ok(instances)
}

/// Load a corpus, normalize labels against `scheme`, and fix the instance
/// order per `order`. Deterministic given the file bytes and arguments.
pub fn load_corpus(
    path: &Path,
    mapping: &ColumnMapping,
    scheme: LabelScheme,
    emotion: &str,
    order: OrderPolicy,
) -> Result<LabeledCorpus> {
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .unwrap_or("")
        .to_lowercase();
    let instances = match ext.as_str() {
        "jsonl" | "ndjson" => load_jsonl(path, mapping)?,
        "csv" => load_delimited(path, mapping, b',')?,
        _ => load_delimited(path, mapping, b'\t')?,
    };
    Ok(LabeledCorpus::new(
        instances,
        scheme,
        emotion.to_string(),
        order,
    )?)
}

/// Write a corpus as `id<TAB>text<TAB>label` (plus `timestamp` when every
/// instance carries one), the same shape `load_corpus` reads back.
pub fn save_corpus_tsv(corpus: &LabeledCorpus, path: &Path) -> Result<()> {
    let mut out = fs::File::create(path)?;
    let with_ts = !corpus.is_empty() && corpus.instances().iter().all(|i| i.timestamp.is_some());
    if with_ts {
        writeln!(out, "id\ttext\tlabel\ttimestamp")?;
    } else {
        writeln!(out, "id\ttext\tlabel")?;
    }
    for inst in corpus.instances() {
        if with_ts {
            writeln!(
                out,
                "{}\t{}\t{}\t{}",
                inst.id,
                inst.text,
                inst.gold,
                inst.timestamp.expect("checked above")
            )?;
        } else {
            writeln!(out, "{}\t{}\t{}", inst.id, inst.text, inst.gold)?;
        }
    }
    Ok(())
}
