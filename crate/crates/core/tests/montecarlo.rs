//! Seeded Monte-Carlo checks of the statistical behavior of synthetic
//! corpora and simulated classifiers. Every run is pinned by explicit
//! seeds, so these are deterministic despite their stochastic subject.

use emoarc_core::arc::{gold_arc, predicted_arc, ArcConfig};
use emoarc_core::corpus::LabelScheme;
use emoarc_core::eval::spearman_arcs;
use emoarc_core::oracle::{simulate_labels, OracleConfig};
use emoarc_core::synth::{generate, SynthSpec};

fn seven_class() -> LabelScheme {
    LabelScheme::categorical((-3..=3).map(f64::from).collect())
}

#[test]
fn zero_signal_text_is_uninformative() {
    // with no label signal the predicted arc is pure noise: mean rho over
    // 50 seeds stays near zero
    let mut sum = 0.0;
    for seed in 0..50 {
        let spec = SynthSpec {
            n_instances: 2_000,
            scheme: seven_class(),
            vocab_size: 160,
            tokens_per_instance: 8,
            label_signal: 0.0,
            seed,
        };
        let (corpus, lexicon) = generate(&spec).unwrap();
        let config = ArcConfig::new(100);
        let gold = gold_arc(&corpus, &config).unwrap();
        let pred = predicted_arc(&corpus, &lexicon, &config).unwrap();
        sum += spearman_arcs(&gold, &pred).unwrap();
    }
    let mean = sum / 50.0;
    assert!(mean.abs() < 0.05, "mean rho {mean}");
}

#[test]
fn weak_signal_rho_rises_with_bin_size() {
    let spec = SynthSpec {
        n_instances: 5_000,
        scheme: seven_class(),
        vocab_size: 160,
        tokens_per_instance: 8,
        label_signal: 0.3,
        seed: 42,
    };
    let (corpus, lexicon) = generate(&spec).unwrap();
    let mut last = f64::NEG_INFINITY;
    for bin in [1, 10, 50, 100, 200, 300] {
        let config = ArcConfig::new(bin);
        let gold = gold_arc(&corpus, &config).unwrap();
        let pred = predicted_arc(&corpus, &lexicon, &config).unwrap();
        let rho = spearman_arcs(&gold, &pred).unwrap();
        assert!(rho > last, "rho {rho} did not rise at bin {bin} (last {last})");
        last = rho;
    }
}

#[test]
fn oracle_monotone_in_accuracy_at_fixed_bin() {
    let spec = SynthSpec {
        n_instances: 5_000,
        scheme: seven_class(),
        vocab_size: 160,
        tokens_per_instance: 8,
        label_signal: 0.3,
        seed: 42,
    };
    let (corpus, _) = generate(&spec).unwrap();
    let config = ArcConfig::new(100);
    let gold = gold_arc(&corpus, &config).unwrap();
    let trials = 20;
    let mut means = Vec::new();
    for p in [0.3, 0.45, 0.6, 0.8] {
        let cfg = OracleConfig::new(p, 1234, trials);
        let mut sum = 0.0;
        for trial in 0..trials {
            let labels = simulate_labels(&corpus, &cfg, trial).unwrap();
            let pred = emoarc_core::arc::arc_from_series(&labels, &config).unwrap();
            sum += spearman_arcs(&gold, &pred).unwrap();
        }
        means.push(sum / f64::from(trials));
    }
    for pair in means.windows(2) {
        assert!(pair[0] < pair[1], "means not increasing: {means:?}");
    }
}

#[test]
fn oracle_monotone_in_bin_size_at_fixed_accuracy() {
    let spec = SynthSpec {
        n_instances: 5_000,
        scheme: seven_class(),
        vocab_size: 160,
        tokens_per_instance: 8,
        label_signal: 0.3,
        seed: 42,
    };
    let (corpus, _) = generate(&spec).unwrap();
    let trials = 20;
    let cfg = OracleConfig::new(0.6, 1234, trials);
    let mut last = f64::NEG_INFINITY;
    for bin in [1usize, 10, 50, 100, 200, 300] {
        let config = ArcConfig::new(bin);
        let gold = gold_arc(&corpus, &config).unwrap();
        let mut sum = 0.0;
        for trial in 0..trials {
            let labels = simulate_labels(&corpus, &cfg, trial).unwrap();
            let pred = emoarc_core::arc::arc_from_series(&labels, &config).unwrap();
            sum += spearman_arcs(&gold, &pred).unwrap();
        }
        let mean = sum / f64::from(trials);
        assert!(mean > last, "mean rho {mean} did not rise at bin {bin}");
        last = mean;
    }
}

#[test]
fn oracle_below_chance_anticorrelates() {
    let spec = SynthSpec {
        n_instances: 5_000,
        scheme: seven_class(),
        vocab_size: 160,
        tokens_per_instance: 8,
        label_signal: 0.3,
        seed: 42,
    };
    let (corpus, _) = generate(&spec).unwrap();
    let config = ArcConfig::new(100);
    let gold = gold_arc(&corpus, &config).unwrap();
    let trials = 20;
    let cfg = OracleConfig::new(0.05, 77, trials);
    let mut sum = 0.0;
    for trial in 0..trials {
        let labels = simulate_labels(&corpus, &cfg, trial).unwrap();
        let pred = emoarc_core::arc::arc_from_series(&labels, &config).unwrap();
        sum += spearman_arcs(&gold, &pred).unwrap();
    }
    let mean = sum / f64::from(trials);
    assert!(mean < -0.1, "mean rho {mean} not clearly negative");
}
