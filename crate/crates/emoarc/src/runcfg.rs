//! Structured run configuration: a TOML file mirroring every CLI flag.
//! Flags override file values; each command echoes its fully resolved
//! parameters into the output provenance.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use emoarc_core::arc::{OovPolicy, ScoringMode};
use emoarc_core::corpus::{LabelScheme, OrderPolicy};
use emoarc_core::lexicon::{ScoreRange, ThresholdMode};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub master_seed: Option<u64>,
    pub output_dir: Option<PathBuf>,
    pub corpus: Option<CorpusSection>,
    #[serde(default)]
    pub lexicon: Vec<LexiconSection>,
    pub arc: Option<ArcSection>,
    pub sweep: Option<SweepSection>,
    pub oracle: Option<OracleSection>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusSection {
    pub path: Option<PathBuf>,
    pub text_col: Option<String>,
    pub label_col: Option<String>,
    pub id_col: Option<String>,
    pub time_col: Option<String>,
    /// Categorical label set; mutually exclusive with `range`.
    pub labels: Option<Vec<f64>>,
    /// Continuous label interval `[min, max]`.
    pub range: Option<[f64; 2]>,
    pub order: Option<String>,
    pub shuffle_seed: Option<u64>,
    pub emotion: Option<String>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LexiconSection {
    pub path: PathBuf,
    pub format: Option<String>,
    pub emotion: Option<String>,
    pub range: Option<[f64; 2]>,
    /// Categorical score set; mutually exclusive with `range`.
    pub labels: Option<Vec<f64>>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArcSection {
    pub bin: Option<usize>,
    pub stride: Option<usize>,
    pub oov: Option<String>,
    pub scoring: Option<String>,
    pub tau: Option<f64>,
    pub tau_mode: Option<String>,
    pub standardize: Option<bool>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSection {
    pub bins: Option<Vec<usize>>,
    pub stride: Option<usize>,
    pub oov: Option<Vec<String>>,
    pub taus: Option<Vec<f64>>,
    pub tau_mode: Option<String>,
    pub scoring: Option<Vec<String>>,
    pub threads: Option<usize>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSection {
    pub accuracies: Option<Vec<f64>>,
    pub bins: Option<Vec<usize>>,
    pub trials: Option<u32>,
    pub threads: Option<usize>,
    pub error_model: Option<String>,
}

impl RunConfig {
    pub fn load(path: Option<&Path>) -> Result<RunConfig> {
        match path {
            None => Ok(RunConfig::default()),
            Some(path) => {
                let content = fs::read_to_string(path)?;
                toml::from_str(&content).map_err(|source| Error::Config {
                    path: path.to_path_buf(),
                    source,
                })
            }
        }
    }
}

pub fn parse_oov(token: &str) -> Result<OovPolicy> {
    match token.to_lowercase().replace('_', "-").as_str() {
        "drop-na" | "na" => Ok(OovPolicy::DropNa),
        "zero" => Ok(OovPolicy::Zero),
        other => Err(Error::Usage(format!("unknown OOV policy {other:?}"))),
    }
}

pub fn parse_scoring(token: &str) -> Result<ScoringMode> {
    match token.to_lowercase().replace('_', "-").as_str() {
        "instance-mean" => Ok(ScoringMode::InstanceMean),
        "word-pool" | "window-word-pool" => Ok(ScoringMode::WindowWordPool),
        other => Err(Error::Usage(format!("unknown scoring granularity {other:?}"))),
    }
}

pub fn parse_error_model(token: &str) -> Result<emoarc_core::oracle::ErrorModel> {
    match token.to_lowercase().replace('_', "-").as_str() {
        "uniform" => Ok(emoarc_core::oracle::ErrorModel::Uniform),
        "distance-weighted" => Ok(emoarc_core::oracle::ErrorModel::DistanceWeighted),
        other => Err(Error::Usage(format!("unknown error model {other:?}"))),
    }
}

/// `auto` resolves to the lexicon's default mode at use.
pub fn parse_tau_mode(token: &str) -> Result<Option<ThresholdMode>> {
    match token.to_lowercase().as_str() {
        "auto" => Ok(None),
        "magnitude" => Ok(Some(ThresholdMode::Magnitude)),
        "signed" => Ok(Some(ThresholdMode::Signed)),
        other => Err(Error::Usage(format!("unknown threshold mode {other:?}"))),
    }
}

pub fn parse_order(token: &str, shuffle_seed: Option<u64>) -> Result<OrderPolicy> {
    match token.to_lowercase().replace('_', "-").as_str() {
        "as-given" => Ok(OrderPolicy::AsGiven),
        "timestamp" | "by-timestamp" => Ok(OrderPolicy::ByTimestamp),
        "shuffle" | "seeded-shuffle" => Ok(OrderPolicy::SeededShuffle {
            seed: shuffle_seed.unwrap_or(0),
        }),
        other => Err(Error::Usage(format!("unknown order policy {other:?}"))),
    }
}

/// Resolve a label scheme from a categorical label list or a continuous
/// `[min, max]` pair; exactly one must be present.
pub fn resolve_scheme(labels: Option<Vec<f64>>, range: Option<[f64; 2]>) -> Result<LabelScheme> {
    match (labels, range) {
        (Some(labels), None) => Ok(LabelScheme::categorical(labels)),
        (None, Some([min, max])) => Ok(LabelScheme::continuous(min, max)),
        (Some(_), Some(_)) => Err(Error::Usage(
            "label set and label range are mutually exclusive".into(),
        )),
        (None, None) => Err(Error::Usage(
            "a label scheme is required: pass --labels or --label-range (or set [corpus] labels/range in the config)".into(),
        )),
    }
}

/// Resolve a lexicon score range the same way; `None` lets the format
/// supply its default.
pub fn resolve_lex_range(
    labels: Option<Vec<f64>>,
    range: Option<[f64; 2]>,
) -> Result<Option<ScoreRange>> {
    match (labels, range) {
        (Some(labels), None) => Ok(Some(ScoreRange::discrete(labels))),
        (None, Some([min, max])) => Ok(Some(ScoreRange::interval(min, max))),
        (Some(_), Some(_)) => Err(Error::Usage(
            "lexicon score set and score range are mutually exclusive".into(),
        )),
        (None, None) => Ok(None),
    }
}

/// Parse `lo:hi` (or `lo,hi`) into an interval pair.
pub fn parse_pair(token: &str) -> Result<[f64; 2]> {
    let parts: Vec<&str> = token.split([':', ',']).collect();
    if parts.len() != 2 {
        return Err(Error::Usage(format!("expected lo:hi, got {token:?}")));
    }
    let lo: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| Error::Usage(format!("bad number {:?}", parts[0])))?;
    let hi: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| Error::Usage(format!("bad number {:?}", parts[1])))?;
    Ok([lo, hi])
}

/// Parse a comma-separated list of numbers.
pub fn parse_list<T: std::str::FromStr>(token: &str) -> Result<Vec<T>> {
    token
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<T>()
                .map_err(|_| Error::Usage(format!("bad list element {part:?}")))
        })
        .collect()
}
