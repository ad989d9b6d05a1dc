//! Rolling-window aggregation of emotion scores into arcs.
//!
//! A window of `bin_size` consecutive instances is averaged into one arc
//! value; the window then moves forward by `stride` instances (1 in all
//! reference setups, so adjacent windows overlap heavily and the arc is
//! smooth). Gold arcs average human labels; predicted arcs average lexicon
//! scores, either per instance or over the pooled words of a window.
//!
//! Every window is summed left to right over the instance order, so
//! results are bit-identical to a per-window brute-force re-summation and
//! independent of any parallelism in the caller.

use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::corpus::LabeledCorpus;
use crate::error::{Error, Result};
use crate::lexicon::{EmotionLexicon, ThresholdSpec};
use crate::textprep::{tokenize, TokenList};

/// Treatment of words absent from the lexicon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OovPolicy {
    /// Skip out-of-vocabulary words entirely.
    DropNa,
    /// Count them with score 0 (neutral / not associated), lowering the
    /// average relative to dropping them.
    Zero,
}

/// What a predicted window score averages over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScoringMode {
    /// Mean of per-instance scores, mirroring how gold arcs average
    /// per-instance labels. Instances without a defined score are skipped.
    InstanceMean,
    /// Mean over the concatenated words of all instances in the window.
    WindowWordPool,
}

/// Parameters of arc generation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArcConfig {
    pub bin_size: usize,
    pub stride: usize,
    pub oov_policy: OovPolicy,
    pub scoring: ScoringMode,
    pub threshold: Option<ThresholdSpec>,
}

impl ArcConfig {
    pub fn new(bin_size: usize) -> Self {
        ArcConfig {
            bin_size,
            stride: 1,
            oov_policy: OovPolicy::DropNa,
            scoring: ScoringMode::InstanceMean,
            threshold: None,
        }
    }

    pub fn with_stride(mut self, stride: usize) -> Self {
        self.stride = stride;
        self
    }

    pub fn with_oov(mut self, oov: OovPolicy) -> Self {
        self.oov_policy = oov;
        self
    }

    pub fn with_scoring(mut self, scoring: ScoringMode) -> Self {
        self.scoring = scoring;
        self
    }

    pub fn with_threshold(mut self, spec: ThresholdSpec) -> Self {
        self.threshold = Some(spec);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.bin_size == 0 {
            return Err(Error::InvalidConfig(String::from("bin size must be positive")));
        }
        if self.stride == 0 {
            return Err(Error::InvalidConfig(String::from("stride must be positive")));
        }
        Ok(())
    }
}

/// Number of windows over `len` instances: `(len - bin) / stride + 1`.
pub fn window_count(len: usize, bin_size: usize, stride: usize) -> Result<usize> {
    if bin_size == 0 || stride == 0 {
        return Err(Error::InvalidConfig(String::from(
            "bin size and stride must be positive",
        )));
    }
    if len == 0 {
        return Err(Error::EmptyCorpus);
    }
    if bin_size > len {
        return Err(Error::BinTooLarge { bin: bin_size, len });
    }
    Ok((len - bin_size) / stride + 1)
}

/// An emotion arc: one aggregate score per window.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmotionArc {
    values: Vec<f64>,
    window_starts: Vec<usize>,
    standardized: bool,
    config: ArcConfig,
}

impl EmotionArc {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn window_starts(&self) -> &[usize] {
        &self.window_starts
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_standardized(&self) -> bool {
        self.standardized
    }

    pub fn config(&self) -> &ArcConfig {
        &self.config
    }

    /// Rebuild an arc from previously exported parts, e.g. a CSV written by
    /// the companion crate.
    pub fn from_parts(
        values: Vec<f64>,
        window_starts: Vec<usize>,
        standardized: bool,
        config: ArcConfig,
    ) -> Result<Self> {
        config.validate()?;
        if values.len() != window_starts.len() {
            return Err(Error::LengthMismatch {
                left: values.len(),
                right: window_starts.len(),
            });
        }
        Ok(EmotionArc {
            values,
            window_starts,
            standardized,
            config,
        })
    }
}

/// Mean of each window of a raw per-instance series.
fn window_means(series: &[f64], config: &ArcConfig) -> Result<EmotionArc> {
    config.validate()?;
    let count = window_count(series.len(), config.bin_size, config.stride)?;
    let mut values = Vec::with_capacity(count);
    let mut window_starts = Vec::with_capacity(count);
    for t in 0..count {
        let start = t * config.stride;
        let window = &series[start..start + config.bin_size];
        let mut sum = 0.0;
        for v in window {
            sum += *v;
        }
        values.push(sum / config.bin_size as f64);
        window_starts.push(start);
    }
    Ok(EmotionArc {
        values,
        window_starts,
        standardized: false,
        config: config.clone(),
    })
}

/// Gold arc: rolling mean of the human-assigned labels.
pub fn gold_arc(corpus: &LabeledCorpus, config: &ArcConfig) -> Result<EmotionArc> {
    window_means(&corpus.golds(), config)
}

/// Arc over an arbitrary per-instance score series (one value per
/// instance, in timeline order), e.g. simulated classifier labels.
pub fn arc_from_series(series: &[f64], config: &ArcConfig) -> Result<EmotionArc> {
    window_means(series, config)
}

/// Mean lexicon score of one instance, or `None` when nothing is scorable.
///
/// Under [`OovPolicy::DropNa`] the mean runs over the tokens found in the
/// lexicon and is undefined if none are found. Under [`OovPolicy::Zero`]
/// every token contributes, OOV tokens as 0. An empty token list is
/// unscorable under both policies.
pub fn score_instance(tokens: &TokenList, lex: &EmotionLexicon, oov: OovPolicy) -> Option<f64> {
    let mut sum = 0.0;
    let mut found = 0usize;
    for tok in tokens.iter() {
        if let Some(score) = lex.lookup(tok) {
            sum += score;
            found += 1;
        }
    }
    match oov {
        OovPolicy::DropNa => (found > 0).then(|| sum / found as f64),
        OovPolicy::Zero => (!tokens.is_empty()).then(|| sum / tokens.len() as f64),
    }
}

/// Per-instance scoring summary reused across overlapping windows.
struct InstanceScores {
    /// Lexicon score per token, `None` when OOV.
    token_scores: Vec<Vec<Option<f64>>>,
}

impl InstanceScores {
    fn build(corpus: &LabeledCorpus, lex: &EmotionLexicon) -> Self {
        let token_scores = corpus
            .instances()
            .iter()
            .map(|inst| {
                tokenize(&inst.text)
                    .tokens()
                    .iter()
                    .map(|tok| lex.lookup(tok))
                    .collect()
            })
            .collect();
        InstanceScores { token_scores }
    }

    fn instance_score(&self, i: usize, oov: OovPolicy) -> Option<f64> {
        let scores = &self.token_scores[i];
        let mut sum = 0.0;
        let mut found = 0usize;
        for s in scores.iter().flatten() {
            sum += *s;
            found += 1;
        }
        match oov {
            OovPolicy::DropNa => (found > 0).then(|| sum / found as f64),
            OovPolicy::Zero => (!scores.is_empty()).then(|| sum / scores.len() as f64),
        }
    }
}

/// Predicted arc: rolling aggregation of lexicon scores.
///
/// Any threshold in `config` is applied to the lexicon first. A window
/// with no scorable content at all (for example after an over-aggressive
/// threshold) invalidates the arc with [`Error::EmptyWindow`].
pub fn predicted_arc(
    corpus: &LabeledCorpus,
    lex: &EmotionLexicon,
    config: &ArcConfig,
) -> Result<EmotionArc> {
    config.validate()?;
    let count = window_count(corpus.len(), config.bin_size, config.stride)?;
    let thresholded;
    let lex = match &config.threshold {
        Some(spec) => {
            thresholded = lex.threshold(spec)?;
            &thresholded
        }
        None => lex,
    };
    let scores = InstanceScores::build(corpus, lex);

    let mut values = Vec::with_capacity(count);
    let mut window_starts = Vec::with_capacity(count);
    for t in 0..count {
        let start = t * config.stride;
        let value = match config.scoring {
            ScoringMode::InstanceMean => {
                let mut sum = 0.0;
                let mut defined = 0usize;
                for i in start..start + config.bin_size {
                    if let Some(s) = scores.instance_score(i, config.oov_policy) {
                        sum += s;
                        defined += 1;
                    }
                }
                (defined > 0).then(|| sum / defined as f64)
            }
            ScoringMode::WindowWordPool => {
                let mut sum = 0.0;
                let mut found = 0usize;
                let mut total = 0usize;
                for i in start..start + config.bin_size {
                    for s in &scores.token_scores[i] {
                        total += 1;
                        if let Some(s) = s {
                            sum += *s;
                            found += 1;
                        }
                    }
                }
                match config.oov_policy {
                    OovPolicy::DropNa => (found > 0).then(|| sum / found as f64),
                    OovPolicy::Zero => (total > 0).then(|| sum / total as f64),
                }
            }
        };
        match value {
            Some(v) => {
                values.push(v);
                window_starts.push(start);
            }
            None => return Err(Error::EmptyWindow { window: t }),
        }
    }
    Ok(EmotionArc {
        values,
        window_starts,
        standardized: false,
        config: config.clone(),
    })
}

/// Z-score an arc so it has zero mean and unit (population) variance.
/// Constant arcs and arcs with fewer than two windows are degenerate.
pub fn standardize(arc: &EmotionArc) -> Result<EmotionArc> {
    let n = arc.values.len();
    if n < 2 {
        return Err(Error::DegenerateArc(String::from("fewer than two windows")));
    }
    let mut sum = 0.0;
    for v in &arc.values {
        sum += *v;
    }
    let mean = sum / n as f64;
    let mut ss = 0.0;
    for v in &arc.values {
        let d = *v - mean;
        ss += d * d;
    }
    let std = libm::sqrt(ss / n as f64);
    if std == 0.0 {
        return Err(Error::DegenerateArc(String::from("constant values")));
    }
    let values = arc.values.iter().map(|v| (*v - mean) / std).collect();
    Ok(EmotionArc {
        values,
        window_starts: arc.window_starts.clone(),
        standardized: true,
        config: arc.config.clone(),
    })
}
