//! Core primitives for generating and evaluating emotion arcs.
//!
//! An emotion arc is a time series of aggregate emotion scores over a
//! temporally ordered collection of text instances (tweets, review
//! sentences, diary posts). This crate provides everything needed to build
//! and compare such arcs without touching the filesystem:
//!
//! - [`lexicon`]: emotion lexicons (term → association score), thresholding
//!   and lookup.
//! - [`textprep`]: deterministic tokenization of raw instance text.
//! - [`corpus`]: labeled corpora with numeric gold labels and instance
//!   ordering policies.
//! - [`arc`]: rolling-window aggregation of gold labels or lexicon scores
//!   into arcs, plus z-score standardization.
//! - [`eval`]: tied-rank Spearman correlation between arcs and grid sweeps
//!   over aggregation parameters.
//! - [`oracle`]: simulation of an instance-level classifier with a chosen
//!   accuracy, for mapping classifier quality to arc quality.
//! - [`synth`]: seeded synthetic corpus/lexicon generation for tests and
//!   benchmarks.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `emoarc` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arc;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod lexicon;
pub mod oracle;
pub mod synth;
pub mod textprep;

pub use arc::{gold_arc, predicted_arc, score_instance, standardize, ArcConfig, EmotionArc, OovPolicy, ScoringMode};
pub use corpus::{Instance, LabelScheme, LabeledCorpus, OrderPolicy};
pub use error::Error;
pub use eval::{evaluate_pair, spearman, spearman_arcs, EvalReport, SweepGrid};
pub use lexicon::{EmotionLexicon, Granularity, ScoreRange, ThresholdMode, ThresholdSpec};
pub use oracle::{oracle_curve, simulate_labels, ErrorModel, OracleConfig};
pub use synth::{generate, SynthSpec};
pub use textprep::{tokenize, TokenList};
