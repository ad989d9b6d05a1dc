//! Lexicon file formats.
//!
//! All formats are UTF-8 TSV. Lines starting with `#` are comments and
//! blank lines are skipped. Scores use `.` as the decimal separator.
//!
//! - `two_column`: `term<TAB>score`, header row optional.
//! - `nrc_emolex`: `term<TAB>emotion<TAB>0|1`; rows are filtered by the
//!   requested emotion.
//! - `nrc_vad`: header row required, `term` followed by one column per
//!   dimension; the requested dimension is selected by header name.
//!
//! Multi-word terms can never match single-word tokens, so they are
//! dropped at load with a count. Duplicate terms resolve to the last
//! occurrence, also counted.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use emoarc_core::lexicon::{EmotionLexicon, Granularity, ScoreRange};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LexiconFormat {
    TwoColumn,
    NrcEmolex,
    NrcVad,
}

impl LexiconFormat {
    pub fn parse(token: &str) -> Result<Self> {
        match token.to_lowercase().replace('_', "-").as_str() {
            "two-column" => Ok(LexiconFormat::TwoColumn),
            "nrc-emolex" | "emolex" => Ok(LexiconFormat::NrcEmolex),
            "nrc-vad" | "nrc-vad-column" | "vad" => Ok(LexiconFormat::NrcVad),
            other => Err(Error::Usage(format!("unknown lexicon format {other:?}"))),
        }
    }

    pub fn default_range(&self) -> ScoreRange {
        match self {
            LexiconFormat::NrcEmolex => ScoreRange::discrete(vec![0.0, 1.0]),
            _ => ScoreRange::interval(-1.0, 1.0),
        }
    }
}

/// A loaded lexicon plus the load diagnostics.
#[derive(Clone, Debug)]
pub struct LexiconLoad {
    pub lexicon: EmotionLexicon,
    pub duplicates: usize,
    pub multiword_rejected: usize,
}

fn granularity_of(range: &ScoreRange) -> Granularity {
    match range {
        ScoreRange::Interval { .. } => Granularity::Continuous,
        ScoreRange::Discrete(_) => Granularity::Categorical,
    }
}

struct RowReader<'a> {
    path: &'a Path,
    lineno: usize,
}

impl<'a> RowReader<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            path: self.path.to_path_buf(),
            line: self.lineno,
            message: message.into(),
        }
    }

    fn score(&self, field: &str) -> Result<f64> {
        field
            .trim()
            .parse::<f64>()
            .map_err(|_| self.err(format!("non-numeric score {field:?}")))
    }
}

struct EntrySink {
    entries: BTreeMap<String, f64>,
    duplicates: usize,
    multiword_rejected: usize,
}

impl EntrySink {
    fn new() -> Self {
        EntrySink {
            entries: BTreeMap::new(),
            duplicates: 0,
            multiword_rejected: 0,
        }
    }

    fn push(&mut self, reader: &RowReader<'_>, raw_term: &str, score: f64) -> Result<()> {
        let term = raw_term.trim().to_lowercase();
        if term.is_empty() {
            return Err(reader.err("empty term"));
        }
        if term.chars().any(char::is_whitespace) {
            self.multiword_rejected += 1;
            return Ok(());
        }
        if self.entries.insert(term, score).is_some() {
            self.duplicates += 1;
        }
        Ok(())
    }
}

fn data_lines(content: &str) -> impl Iterator<Item = (usize, &str)> {
    content
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim_end_matches('\r')))
        .filter(|(_, line)| !line.trim().is_empty() && !line.trim_start().starts_with('#'))
}

/// Load and validate a lexicon. `emotion` selects the EmoLex emotion or
/// VAD dimension; for `two_column` it only names the loaded lexicon.
/// Terms are lowercased; scores are validated against `range`.
pub fn load_lexicon(
    path: &Path,
    format: LexiconFormat,
    emotion: &str,
    range: &ScoreRange,
) -> Result<LexiconLoad> {
    let content = fs::read_to_string(path)?;
    let mut sink = EntrySink::new();
    let mut reader = RowReader { path, lineno: 0 };

    match format {
        LexiconFormat::TwoColumn => {
            let mut seen_data = false;
            for (lineno, line) in data_lines(&content) {
                reader.lineno = lineno;
                let fields: Vec<&str> = line.split('\t').collect();
                if fields.len() != 2 {
                    return Err(reader.err(format!("expected 2 columns, got {}", fields.len())));
                }
                if !seen_data && fields[1].trim().parse::<f64>().is_err() {
                    seen_data = true; // header row
                    continue;
                }
                seen_data = true;
                let score = reader.score(fields[1])?;
                sink.push(&reader, fields[0], score)?;
            }
        }
        LexiconFormat::NrcEmolex => {
            let mut matched = false;
            let mut seen_data = false;
            for (lineno, line) in data_lines(&content) {
                reader.lineno = lineno;
                let fields: Vec<&str> = line.split('\t').collect();
                if fields.len() != 3 {
                    return Err(reader.err(format!("expected 3 columns, got {}", fields.len())));
                }
                if !seen_data && fields[2].trim().parse::<f64>().is_err() {
                    seen_data = true;
                    continue;
                }
                seen_data = true;
                if !fields[1].trim().eq_ignore_ascii_case(emotion) {
                    continue;
                }
                matched = true;
                let score = reader.score(fields[2])?;
                sink.push(&reader, fields[0], score)?;
            }
            if !matched {
                return Err(Error::EmotionAbsent {
                    path: path.to_path_buf(),
                    emotion: emotion.to_string(),
                });
            }
        }
        LexiconFormat::NrcVad => {
            let mut rows = data_lines(&content);
            let (_, header) = rows.next().ok_or_else(|| Error::Parse {
                path: path.to_path_buf(),
                line: 0,
                message: "missing required header row".into(),
            })?;
            let columns: Vec<&str> = header.split('\t').collect();
            let dim_index = columns
                .iter()
                .skip(1)
                .position(|c| c.trim().eq_ignore_ascii_case(emotion))
                .map(|i| i + 1)
                .ok_or_else(|| Error::DimensionAbsent {
                    path: path.to_path_buf(),
                    dimension: emotion.to_string(),
                    available: columns[1..].join(", "),
                })?;
            for (lineno, line) in rows {
                reader.lineno = lineno;
                let fields: Vec<&str> = line.split('\t').collect();
                if fields.len() != columns.len() {
                    return Err(reader.err(format!(
                        "expected {} columns, got {}",
                        columns.len(),
                        fields.len()
                    )));
                }
                let score = reader.score(fields[dim_index])?;
                sink.push(&reader, fields[0], score)?;
            }
        }
    }

    let lexicon = EmotionLexicon::new(
        emotion.to_string(),
        granularity_of(range),
        range.clone(),
        sink.entries,
        format!("{}", path.display()),
    )?;
    Ok(LexiconLoad {
        lexicon,
        duplicates: sink.duplicates,
        multiword_rejected: sink.multiword_rejected,
    })
}

/// Write the two-column TSV form. Metadata rides along as `#` comments for
/// human readers; the JSON form carries it losslessly.
pub fn save_lexicon_tsv(lexicon: &EmotionLexicon, path: &Path) -> Result<()> {
    let mut out = fs::File::create(path)?;
    writeln!(out, "# emotion: {}", lexicon.emotion())?;
    writeln!(out, "# provenance: {}", lexicon.provenance())?;
    writeln!(out, "term\tscore")?;
    for (term, score) in lexicon.entries() {
        writeln!(out, "{term}\t{score}")?;
    }
    Ok(())
}

/// Full-fidelity JSON form: entries and all metadata.
pub fn save_lexicon_json(lexicon: &EmotionLexicon, path: &Path) -> Result<()> {
    let mut out = fs::File::create(path)?;
    serde_json::to_writer_pretty(&mut out, lexicon)?;
    writeln!(out)?;
    Ok(())
}

pub fn load_lexicon_json(path: &Path) -> Result<EmotionLexicon> {
    let content = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&content)?)
}
