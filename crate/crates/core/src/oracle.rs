//! Simulation of an instance-level classifier with a chosen accuracy.
//!
//! The simulated classifier walks the corpus and emits the gold label with
//! probability `accuracy`; otherwise it picks one of the `k - 1` incorrect
//! labels uniformly at random. Errors are uniform over the incorrect
//! labels — there is no distance weighting towards near labels. Arcs built
//! from the simulated labels show how instance-level accuracy translates
//! into arc quality.
//!
//! Randomness is keyed on `(seed, trial, instance ordinal)`, so every
//! instance keeps its fate under corpus reordering and trials can run on
//! any worker pool without changing the results.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::arc::{arc_from_series, gold_arc, ArcConfig};
use crate::corpus::{LabelScheme, LabeledCorpus};
use crate::error::{Error, Result};
use crate::eval::{spearman_arcs, EvalReport, ReportMeta};

/// Domain tag separating oracle RNG streams from other seeded components.
const STREAM_TAG: u64 = 0x4f52_4143_4c45_0001;

/// How incorrect labels are chosen.
///
/// Real classifiers tend to err on labels near the true one; the plain
/// simulation deliberately does not, which is part of why simulated curves
/// and real-model results can differ. The weighted variant exists as an
/// extension and is off by default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorModel {
    /// Incorrect labels drawn uniformly.
    #[default]
    Uniform,
    /// Incorrect labels weighted by inverse distance to the gold label
    /// value.
    DistanceWeighted,
}

/// Parameters of a simulated classifier run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// Instance-level accuracy `p` in [0, 1].
    pub accuracy: f64,
    pub seed: u64,
    /// Independent simulations to average rho over.
    pub trials: u32,
    #[serde(default)]
    pub error_model: ErrorModel,
}

impl OracleConfig {
    pub fn new(accuracy: f64, seed: u64, trials: u32) -> Self {
        OracleConfig {
            accuracy,
            seed,
            trials,
            error_model: ErrorModel::Uniform,
        }
    }

    pub fn with_error_model(mut self, error_model: ErrorModel) -> Self {
        self.error_model = error_model;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.accuracy) {
            return Err(Error::InvalidConfig(String::from(
                "accuracy must lie in [0, 1]",
            )));
        }
        if self.trials == 0 {
            return Err(Error::InvalidConfig(String::from(
                "at least one trial is required",
            )));
        }
        Ok(())
    }
}

fn instance_rng(seed: u64, trial: u32, ordinal: u64) -> ChaCha12Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&u64::from(trial).to_le_bytes());
    key[16..24].copy_from_slice(&ordinal.to_le_bytes());
    key[24..32].copy_from_slice(&STREAM_TAG.to_le_bytes());
    ChaCha12Rng::from_seed(key)
}

/// One simulated labeling pass over a categorical corpus.
///
/// Per instance, independently: with probability `cfg.accuracy` the gold
/// label is emitted; otherwise a label drawn uniformly from the incorrect
/// ones. Deterministic given `(cfg.seed, trial, instance ordinal)`.
pub fn simulate_labels(
    corpus: &LabeledCorpus,
    cfg: &OracleConfig,
    trial: u32,
) -> Result<Vec<f64>> {
    cfg.validate()?;
    let labels = match corpus.scheme() {
        LabelScheme::Categorical { labels } => labels,
        LabelScheme::Continuous { .. } => {
            return Err(Error::InvalidScheme(String::from(
                "classifier simulation requires a categorical scheme",
            )))
        }
    };
    let k = labels.len();
    if k < 2 {
        return Err(Error::InvalidScheme(String::from(
            "need at least two classes",
        )));
    }
    let mut predicted = Vec::with_capacity(corpus.len());
    for inst in corpus.instances() {
        let mut rng = instance_rng(cfg.seed, trial, inst.ordinal);
        let u: f64 = rng.random();
        if u < cfg.accuracy {
            predicted.push(inst.gold);
        } else {
            let gold_idx = labels
                .iter()
                .position(|l| *l == inst.gold)
                .expect("corpus labels validated against scheme");
            let wrong = match cfg.error_model {
                ErrorModel::Uniform => {
                    let mut wrong = rng.random_range(0..k - 1);
                    if wrong >= gold_idx {
                        wrong += 1;
                    }
                    wrong
                }
                ErrorModel::DistanceWeighted => {
                    let total: f64 = labels
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| *j != gold_idx)
                        .map(|(_, l)| 1.0 / libm::fabs(*l - inst.gold))
                        .sum();
                    let mut draw: f64 = rng.random::<f64>() * total;
                    let mut chosen = if gold_idx == k - 1 { k - 2 } else { k - 1 };
                    for (j, l) in labels.iter().enumerate() {
                        if j == gold_idx {
                            continue;
                        }
                        draw -= 1.0 / libm::fabs(*l - inst.gold);
                        if draw <= 0.0 {
                            chosen = j;
                            break;
                        }
                    }
                    chosen
                }
            };
            predicted.push(labels[wrong]);
        }
    }
    Ok(predicted)
}

/// Evaluate one (accuracy, bin) cell: `template.trials` simulations, each
/// turned into an arc and correlated against the gold arc; rho is averaged
/// and its min/max across trials retained.
pub fn run_oracle_cell(
    corpus_id: &str,
    corpus: &LabeledCorpus,
    accuracy: f64,
    config: &ArcConfig,
    template: &OracleConfig,
) -> EvalReport {
    let cfg = OracleConfig {
        accuracy,
        ..template.clone()
    };
    let meta = ReportMeta {
        corpus: corpus_id.to_string(),
        emotion: corpus.emotion().to_string(),
        method: String::from("oracle"),
        lexicon: None,
        lexicon_granularity: None,
        accuracy: Some(accuracy),
        trials: Some(cfg.trials),
    };
    let outcome = (|| -> Result<EvalReport> {
        cfg.validate()?;
        let gold = gold_arc(corpus, config)?;
        let mut sum = 0.0;
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for trial in 0..cfg.trials {
            let labels = simulate_labels(corpus, &cfg, trial)?;
            let pred = arc_from_series(&labels, config)?;
            let rho = spearman_arcs(&gold, &pred)?;
            sum += rho;
            min = min.min(rho);
            max = max.max(rho);
        }
        let mut report = EvalReport::from_config(&meta, config, false);
        report.n_windows = gold.len();
        report.rho = Some(sum / f64::from(cfg.trials));
        report.rho_min = Some(min);
        report.rho_max = Some(max);
        Ok(report)
    })();
    outcome.unwrap_or_else(|err| EvalReport::failed(&meta, config, false, &err))
}

/// Oracle accuracy curve: one report per (accuracy, bin) pair, in the
/// given order, at stride 1.
pub fn oracle_curve(
    corpus_id: &str,
    corpus: &LabeledCorpus,
    accuracies: &[f64],
    bins: &[usize],
    template: &OracleConfig,
) -> Vec<EvalReport> {
    let mut reports = Vec::with_capacity(accuracies.len() * bins.len());
    for &p in accuracies {
        for &bin in bins {
            let config = ArcConfig::new(bin);
            reports.push(run_oracle_cell(corpus_id, corpus, p, &config, template));
        }
    }
    reports
}
