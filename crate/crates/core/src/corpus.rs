//! Labeled corpora: ordered text instances with numeric gold emotion labels.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Admissible gold labels of a corpus: an ordered finite label list
/// (e.g. -3..3 or {0,1}) or a closed real interval.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LabelScheme {
    Categorical { labels: Vec<f64> },
    Continuous { min: f64, max: f64 },
}

impl LabelScheme {
    pub fn categorical(labels: Vec<f64>) -> Self {
        LabelScheme::Categorical { labels }
    }

    pub fn continuous(min: f64, max: f64) -> Self {
        LabelScheme::Continuous { min, max }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            LabelScheme::Categorical { labels } => {
                if labels.iter().any(|l| !l.is_finite()) {
                    return Err(Error::InvalidScheme(String::from("non-finite label")));
                }
                let distinct: BTreeSet<u64> = labels.iter().map(|l| l.to_bits()).collect();
                if distinct.len() < 2 {
                    return Err(Error::InvalidScheme(String::from(
                        "categorical scheme needs at least two distinct labels",
                    )));
                }
                if distinct.len() != labels.len() {
                    return Err(Error::InvalidScheme(String::from("duplicate label")));
                }
            }
            LabelScheme::Continuous { min, max } => {
                if !min.is_finite() || !max.is_finite() || min > max {
                    return Err(Error::InvalidScheme(String::from(
                        "continuous scheme needs a non-empty [min, max] interval",
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn admits(&self, label: f64) -> bool {
        match self {
            LabelScheme::Categorical { labels } => labels.contains(&label),
            LabelScheme::Continuous { min, max } => label >= *min && label <= *max,
        }
    }

    /// Number of classes `k` for categorical schemes.
    pub fn class_count(&self) -> Option<usize> {
        match self {
            LabelScheme::Categorical { labels } => Some(labels.len()),
            LabelScheme::Continuous { .. } => None,
        }
    }

    /// Smallest and largest admissible label.
    pub fn bounds(&self) -> (f64, f64) {
        match self {
            LabelScheme::Categorical { labels } => {
                let min = labels.iter().copied().fold(f64::INFINITY, f64::min);
                let max = labels.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                (min, max)
            }
            LabelScheme::Continuous { min, max } => (*min, *max),
        }
    }
}

/// How the instances of a corpus are ordered into a timeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderPolicy {
    AsGiven,
    ByTimestamp,
    SeededShuffle { seed: u64 },
}

/// One text instance with its gold emotion label.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub id: String,
    pub text: String,
    pub gold: f64,
    pub timestamp: Option<f64>,
    /// Position at ingestion time, before any reordering. Seeded
    /// simulations key their per-instance randomness on this, so an
    /// instance keeps its fate under any ordering policy.
    pub ordinal: u64,
}

impl Instance {
    pub fn new(id: String, text: String, gold: f64, timestamp: Option<f64>) -> Self {
        Instance {
            id,
            text,
            gold,
            timestamp,
            ordinal: 0,
        }
    }
}

/// An ordered, validated corpus of labeled instances.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LabeledCorpus {
    instances: Vec<Instance>,
    scheme: LabelScheme,
    emotion: String,
    order_policy: OrderPolicy,
}

impl LabeledCorpus {
    /// Validate `instances` against `scheme`, assign ingestion ordinals and
    /// apply `order_policy`. Instance ids must be unique; under
    /// [`OrderPolicy::ByTimestamp`] every instance needs a finite timestamp.
    pub fn new(
        mut instances: Vec<Instance>,
        scheme: LabelScheme,
        emotion: String,
        order_policy: OrderPolicy,
    ) -> Result<Self> {
        scheme.validate()?;
        let mut seen = BTreeSet::new();
        for (i, inst) in instances.iter_mut().enumerate() {
            inst.ordinal = i as u64;
            if !scheme.admits(inst.gold) {
                return Err(Error::LabelOutsideScheme {
                    id: inst.id.clone(),
                    label: inst.gold,
                });
            }
            if !seen.insert(inst.id.clone()) {
                return Err(Error::DuplicateId(inst.id.clone()));
            }
        }
        match order_policy {
            OrderPolicy::AsGiven => {}
            OrderPolicy::ByTimestamp => {
                for inst in &instances {
                    match inst.timestamp {
                        None => return Err(Error::MissingTimestamp(inst.id.clone())),
                        Some(ts) if !ts.is_finite() => {
                            return Err(Error::InvalidTimestamp(inst.id.clone()))
                        }
                        Some(_) => {}
                    }
                }
                instances.sort_by(|a, b| {
                    a.timestamp
                        .unwrap_or(f64::NAN)
                        .total_cmp(&b.timestamp.unwrap_or(f64::NAN))
                });
            }
            OrderPolicy::SeededShuffle { seed } => {
                let mut rng = ChaCha12Rng::seed_from_u64(seed);
                instances.shuffle(&mut rng);
            }
        }
        Ok(LabeledCorpus {
            instances,
            scheme,
            emotion,
            order_policy,
        })
    }

    pub fn instances(&self) -> &[Instance] {
        &self.instances
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    pub fn scheme(&self) -> &LabelScheme {
        &self.scheme
    }

    pub fn emotion(&self) -> &str {
        &self.emotion
    }

    pub fn order_policy(&self) -> OrderPolicy {
        self.order_policy
    }

    /// Gold labels in timeline order.
    pub fn golds(&self) -> Vec<f64> {
        self.instances.iter().map(|i| i.gold).collect()
    }

    /// Affinely map categorical gold labels onto [0, 1]:
    /// `gold' = (gold - min) / (max - min)`. Rank-preserving, so arcs keep
    /// their Spearman relations; instance order and ordinals are untouched.
    pub fn relabel_to_unit(&self) -> Result<LabeledCorpus> {
        let labels = match &self.scheme {
            LabelScheme::Categorical { labels } => labels.clone(),
            LabelScheme::Continuous { .. } => {
                return Err(Error::InvalidScheme(String::from(
                    "relabeling applies to categorical schemes",
                )))
            }
        };
        let (min, max) = self.scheme.bounds();
        if min == max {
            return Err(Error::DegenerateScheme);
        }
        let map = |l: f64| (l - min) / (max - min);
        let instances = self
            .instances
            .iter()
            .map(|inst| Instance {
                gold: map(inst.gold),
                ..inst.clone()
            })
            .collect();
        Ok(LabeledCorpus {
            instances,
            scheme: LabelScheme::Categorical {
                labels: labels.into_iter().map(map).collect(),
            },
            emotion: self.emotion.clone(),
            order_policy: self.order_policy,
        })
    }
}
