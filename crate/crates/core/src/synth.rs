//! Seeded synthetic corpora and companion lexicons.
//!
//! Gold labels track a smooth seeded latent path (two low-frequency
//! sinusoids) with per-instance jitter, like a stream whose aggregate
//! emotion drifts over time. Labels drawn independently per instance would
//! make window means of gold and predicted series keep the instance-level
//! correlation at every bin size — aggregation could never improve arc
//! quality, which is exactly the effect these fixtures exist to exhibit.
//!
//! Each label of the categorical scheme owns a block of vocabulary words
//! whose lexicon score is that label's value. An instance with gold label
//! `l` draws each token from `l`'s block with probability `label_signal`,
//! and otherwise uniformly from the whole vocabulary — including a final
//! block of noise words that stay out of the companion lexicon, so both
//! OOV policies are exercised naturally. At `label_signal = 1.0` lexicon
//! scoring recovers every gold label exactly; at `0.0` the text carries no
//! label information at all.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};

use crate::corpus::{Instance, LabelScheme, LabeledCorpus, OrderPolicy};
use crate::error::{Error, Result};
use crate::lexicon::{EmotionLexicon, Granularity, ScoreRange};

/// Domain tag separating synthesis RNG streams from other seeded components.
const STREAM_TAG: u64 = 0x5359_4e54_4845_0001;

/// Ordinal reserved for the latent-path stream.
const PATH_ORDINAL: u64 = u64::MAX;

/// Half-width of the uniform jitter added to the latent label position.
const LABEL_JITTER: f64 = 1.2;

/// Parameters of a synthetic corpus.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SynthSpec {
    pub n_instances: usize,
    /// Gold label scheme; must be categorical.
    pub scheme: LabelScheme,
    pub vocab_size: usize,
    pub tokens_per_instance: usize,
    /// Fraction of tokens drawn from the gold label's own vocabulary block,
    /// in [0, 1]; the rest are uniform over the whole vocabulary.
    pub label_signal: f64,
    pub seed: u64,
}

impl SynthSpec {
    fn validate(&self) -> Result<usize> {
        if self.n_instances == 0 || self.vocab_size == 0 || self.tokens_per_instance == 0 {
            return Err(Error::InvalidConfig(String::from(
                "instance count, vocabulary size and tokens per instance must be positive",
            )));
        }
        if !(0.0..=1.0).contains(&self.label_signal) {
            return Err(Error::InvalidConfig(String::from(
                "label signal must lie in [0, 1]",
            )));
        }
        self.scheme.validate()?;
        let k = self.scheme.class_count().ok_or_else(|| {
            Error::InvalidScheme(String::from("synthesis requires a categorical scheme"))
        })?;
        // one block per label plus one block of out-of-lexicon noise words
        let needed = k + 1;
        if self.vocab_size < needed {
            return Err(Error::VocabTooSmall {
                vocab: self.vocab_size,
                needed,
            });
        }
        Ok(k)
    }
}

/// Letters-only word for vocabulary index `i` (base-26, fixed width), so
/// generated text survives tokenization unchanged.
fn word(mut i: usize, width: usize) -> String {
    let mut buf = alloc::vec![b'a'; width];
    for slot in buf.iter_mut().rev() {
        *slot = b'a' + (i % 26) as u8;
        i /= 26;
    }
    String::from_utf8(buf).expect("ascii letters")
}

fn word_width(vocab_size: usize) -> usize {
    let mut width = 3;
    let mut capacity = 26usize.pow(3);
    while capacity < vocab_size {
        width += 1;
        capacity *= 26;
    }
    width
}

fn instance_rng(seed: u64, ordinal: u64) -> ChaCha12Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[16..24].copy_from_slice(&ordinal.to_le_bytes());
    key[24..32].copy_from_slice(&STREAM_TAG.to_le_bytes());
    ChaCha12Rng::from_seed(key)
}

/// Smooth latent emotion level over the timeline, in label-index units
/// centered on the middle label. Phases are seeded once per corpus.
struct LatentPath {
    phase_slow: f64,
    phase_fast: f64,
    center: f64,
}

impl LatentPath {
    fn new(seed: u64, k: usize) -> Self {
        let mut rng = instance_rng(seed, PATH_ORDINAL);
        LatentPath {
            phase_slow: rng.random::<f64>(),
            phase_fast: rng.random::<f64>(),
            center: (k - 1) as f64 / 2.0,
        }
    }

    /// Label-index position at relative timeline position `x` in [0, 1].
    fn index_at(&self, x: f64) -> f64 {
        let tau = core::f64::consts::TAU;
        let wave = libm::sin(tau * (2.0 * x + self.phase_slow))
            + 0.5 * libm::sin(tau * (5.0 * x + self.phase_fast));
        // wave lies in [-1.5, 1.5]; span the full label index range
        self.center + wave / 1.5 * self.center
    }
}

/// Generate a corpus and its companion lexicon. Byte-identical output for
/// identical specs; instances are independent seeded streams.
pub fn generate(spec: &SynthSpec) -> Result<(LabeledCorpus, EmotionLexicon)> {
    let k = spec.validate()?;
    let labels = match &spec.scheme {
        LabelScheme::Categorical { labels } => labels.clone(),
        LabelScheme::Continuous { .. } => unreachable!("validated categorical"),
    };
    let width = word_width(spec.vocab_size);
    let block = spec.vocab_size / (k + 1);

    let mut entries = BTreeMap::new();
    for (g, label) in labels.iter().enumerate() {
        for i in g * block..(g + 1) * block {
            entries.insert(word(i, width), *label);
        }
    }
    let (min, max) = spec.scheme.bounds();
    let lexicon = EmotionLexicon::new(
        String::from("synth"),
        Granularity::Continuous,
        ScoreRange::interval(min, max),
        entries,
        format!(
            "synth(seed={},n={},vocab={},tokens={},signal={})",
            spec.seed, spec.n_instances, spec.vocab_size, spec.tokens_per_instance, spec.label_signal
        ),
    )?;

    let path = LatentPath::new(spec.seed, k);
    let span = (spec.n_instances - 1).max(1) as f64;
    let mut instances = Vec::with_capacity(spec.n_instances);
    for i in 0..spec.n_instances {
        let mut rng = instance_rng(spec.seed, i as u64);
        let jitter = (rng.random::<f64>() * 2.0 - 1.0) * LABEL_JITTER;
        let position = path.index_at(i as f64 / span) + jitter;
        let gold_idx = libm::round(position).clamp(0.0, (k - 1) as f64) as usize;
        let mut text = String::new();
        for t in 0..spec.tokens_per_instance {
            let u: f64 = rng.random();
            let idx = if u < spec.label_signal {
                gold_idx * block + rng.random_range(0..block)
            } else {
                rng.random_range(0..spec.vocab_size)
            };
            if t > 0 {
                text.push(' ');
            }
            text.push_str(&word(idx, width));
        }
        instances.push(Instance::new(
            format!("s{i:06}"),
            text,
            labels[gold_idx],
            None,
        ));
    }
    let corpus = LabeledCorpus::new(
        instances,
        spec.scheme.clone(),
        String::from("synth"),
        OrderPolicy::AsGiven,
    )?;
    Ok((corpus, lexicon))
}
