//! Error type shared by all core operations.

use alloc::string::String;

/// Errors produced by corpus construction, arc generation and evaluation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid lexicon: {0}")]
    InvalidLexicon(String),

    #[error("threshold tau {tau} outside [0, {max}]")]
    InvalidThreshold { tau: f64, max: f64 },

    #[error("invalid label scheme: {0}")]
    InvalidScheme(String),

    #[error("label {label} of instance {id} is outside the declared scheme")]
    LabelOutsideScheme { id: String, label: f64 },

    #[error("duplicate instance id {0}")]
    DuplicateId(String),

    #[error("instance {0} has no timestamp but ordering is by timestamp")]
    MissingTimestamp(String),

    #[error("instance {0} has a non-finite timestamp")]
    InvalidTimestamp(String),

    #[error("label scheme has a single distinct label; relabeling is undefined")]
    DegenerateScheme,

    #[error("empty corpus")]
    EmptyCorpus,

    #[error("invalid arc config: {0}")]
    InvalidConfig(String),

    #[error("bin size {bin} exceeds corpus length {len}")]
    BinTooLarge { bin: usize, len: usize },

    #[error("window {window} has no scorable content")]
    EmptyWindow { window: usize },

    #[error("degenerate arc: {0}")]
    DegenerateArc(String),

    #[error("series lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("arcs cover different windows")]
    MisalignedArcs,

    #[error("vocabulary of {vocab} words is too small; need at least {needed}")]
    VocabTooSmall { vocab: usize, needed: usize },
}

impl Error {
    /// Short machine-readable category token, used in report status columns
    /// and for CLI exit codes.
    pub fn category(&self) -> &'static str {
        match self {
            Error::InvalidLexicon(_)
            | Error::InvalidThreshold { .. }
            | Error::InvalidScheme(_)
            | Error::LabelOutsideScheme { .. }
            | Error::DuplicateId(_)
            | Error::MissingTimestamp(_)
            | Error::InvalidTimestamp(_)
            | Error::DegenerateScheme
            | Error::VocabTooSmall { .. } => "format",
            Error::EmptyCorpus | Error::InvalidConfig(_) | Error::BinTooLarge { .. } => {
                "invalid-config"
            }
            Error::EmptyWindow { .. } => "empty-window",
            Error::DegenerateArc(_) | Error::LengthMismatch { .. } | Error::MisalignedArcs => {
                "degenerate-arc"
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
