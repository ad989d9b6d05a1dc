//! Emotion lexicons: term → association score maps with range metadata.
//!
//! Lexicons come in two score granularities. Categorical lexicons label a
//! term as associated / not associated (or negative / neutral / positive),
//! so their admissible scores form a finite set. Continuous lexicons carry
//! real-valued association scores inside a closed interval. A loaded
//! lexicon is immutable and may be shared freely across threads.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Score granularity of a lexicon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Granularity {
    Categorical,
    Continuous,
}

/// Admissible scores of a lexicon: a closed interval for continuous
/// lexicons, a finite label set for categorical ones.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScoreRange {
    Interval { min: f64, max: f64 },
    Discrete(Vec<f64>),
}

impl ScoreRange {
    /// Closed interval `[min, max]`.
    pub fn interval(min: f64, max: f64) -> Self {
        ScoreRange::Interval { min, max }
    }

    /// Finite admissible label set; values are sorted and deduplicated.
    pub fn discrete(mut labels: Vec<f64>) -> Self {
        labels.sort_by(f64::total_cmp);
        labels.dedup();
        ScoreRange::Discrete(labels)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            ScoreRange::Interval { min, max } => {
                if !min.is_finite() || !max.is_finite() || min > max {
                    return Err(Error::InvalidLexicon(String::from(
                        "score interval must be a finite [min, max] with min <= max",
                    )));
                }
            }
            ScoreRange::Discrete(labels) => {
                if labels.is_empty() || labels.iter().any(|l| !l.is_finite()) {
                    return Err(Error::InvalidLexicon(String::from(
                        "discrete score set must be non-empty and finite",
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn contains(&self, score: f64) -> bool {
        match self {
            ScoreRange::Interval { min, max } => score >= *min && score <= *max,
            ScoreRange::Discrete(labels) => labels.contains(&score),
        }
    }

    /// Largest absolute admissible score; upper bound for thresholds.
    pub fn max_abs(&self) -> f64 {
        match self {
            ScoreRange::Interval { min, max } => libm::fabs(*min).max(libm::fabs(*max)),
            ScoreRange::Discrete(labels) => labels
                .iter()
                .map(|l| libm::fabs(*l))
                .fold(0.0, f64::max),
        }
    }

    /// Whether the range admits negative scores (bipolar valence style).
    pub fn is_signed(&self) -> bool {
        match self {
            ScoreRange::Interval { min, .. } => *min < 0.0,
            ScoreRange::Discrete(labels) => labels.iter().any(|l| *l < 0.0),
        }
    }
}

/// How a threshold selects lexicon entries.
///
/// `Magnitude` keeps entries with `|score| >= tau`, `Signed` keeps entries
/// with `score >= tau`. The boundary is inclusive so that `tau = 0` is the
/// identity on non-negative lexicons.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdMode {
    Magnitude,
    Signed,
}

/// Minimum association score for a lexicon entry to participate in scoring.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThresholdSpec {
    pub tau: f64,
    pub mode: ThresholdMode,
}

impl ThresholdSpec {
    pub fn new(tau: f64, mode: ThresholdMode) -> Self {
        ThresholdSpec { tau, mode }
    }

    pub fn validate_for(&self, range: &ScoreRange) -> Result<()> {
        let max = range.max_abs();
        if !self.tau.is_finite() || self.tau < 0.0 || self.tau > max {
            return Err(Error::InvalidThreshold { tau: self.tau, max });
        }
        Ok(())
    }

    /// Whether an entry with this score survives the threshold.
    pub fn keeps(&self, score: f64) -> bool {
        match self.mode {
            ThresholdMode::Magnitude => libm::fabs(score) >= self.tau,
            ThresholdMode::Signed => score >= self.tau,
        }
    }
}

/// A validated emotion lexicon.
///
/// Invariants, enforced at construction:
/// - every entry score lies within [`score_range`](Self::score_range);
/// - every term is non-empty, lowercase and free of whitespace;
/// - categorical lexicons declare a finite label set and continuous ones a
///   closed interval.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmotionLexicon {
    emotion: String,
    granularity: Granularity,
    score_range: ScoreRange,
    entries: BTreeMap<String, f64>,
    provenance: String,
}

impl EmotionLexicon {
    pub fn new(
        emotion: String,
        granularity: Granularity,
        score_range: ScoreRange,
        entries: BTreeMap<String, f64>,
        provenance: String,
    ) -> Result<Self> {
        score_range.validate()?;
        match (granularity, &score_range) {
            (Granularity::Categorical, ScoreRange::Interval { .. }) => {
                return Err(Error::InvalidLexicon(String::from(
                    "categorical lexicon requires a finite label set",
                )));
            }
            (Granularity::Continuous, ScoreRange::Discrete(_)) => {
                return Err(Error::InvalidLexicon(String::from(
                    "continuous lexicon requires a score interval",
                )));
            }
            _ => {}
        }
        for (term, score) in &entries {
            if term.is_empty() {
                return Err(Error::InvalidLexicon(String::from("empty term")));
            }
            if term.chars().any(|c| c.is_whitespace()) {
                return Err(Error::InvalidLexicon(alloc::format!(
                    "term {term:?} contains whitespace"
                )));
            }
            if term.chars().any(|c| c.is_uppercase()) {
                return Err(Error::InvalidLexicon(alloc::format!(
                    "term {term:?} is not lowercase"
                )));
            }
            if !score_range.contains(*score) {
                return Err(Error::InvalidLexicon(alloc::format!(
                    "score {score} of term {term:?} is outside the declared range"
                )));
            }
        }
        Ok(EmotionLexicon {
            emotion,
            granularity,
            score_range,
            entries,
            provenance,
        })
    }

    pub fn emotion(&self) -> &str {
        &self.emotion
    }

    pub fn granularity(&self) -> Granularity {
        self.granularity
    }

    pub fn score_range(&self) -> &ScoreRange {
        &self.score_range
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn entries(&self) -> &BTreeMap<String, f64> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Association score of `term`, or `None` when out of vocabulary.
    /// The OOV decision belongs to the caller.
    pub fn lookup(&self, term: &str) -> Option<f64> {
        self.entries.get(term).copied()
    }

    /// Default thresholding mode for this lexicon: magnitude for signed
    /// (bipolar) score ranges, signed for unipolar intensity ranges.
    pub fn default_threshold_mode(&self) -> ThresholdMode {
        if self.score_range.is_signed() {
            ThresholdMode::Magnitude
        } else {
            ThresholdMode::Signed
        }
    }

    /// New lexicon containing exactly the entries passing `spec`; metadata
    /// is preserved and `self` is left untouched. The result may be empty.
    pub fn threshold(&self, spec: &ThresholdSpec) -> Result<EmotionLexicon> {
        spec.validate_for(&self.score_range)?;
        let entries: BTreeMap<String, f64> = self
            .entries
            .iter()
            .filter(|(_, score)| spec.keeps(**score))
            .map(|(term, score)| (term.clone(), *score))
            .collect();
        Ok(EmotionLexicon {
            emotion: self.emotion.clone(),
            granularity: self.granularity,
            score_range: self.score_range.clone(),
            entries,
            provenance: self.provenance.clone(),
        })
    }
}
