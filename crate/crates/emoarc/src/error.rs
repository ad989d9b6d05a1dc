//! IO-layer errors and their CLI exit codes.

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("{path}: column {column:?} not found in header")]
    MissingColumn { path: PathBuf, column: String },

    #[error("{path}: emotion {emotion:?} not present in lexicon file")]
    EmotionAbsent { path: PathBuf, emotion: String },

    #[error("{path}: dimension {dimension:?} not in header (available: {available})")]
    DimensionAbsent {
        path: PathBuf,
        dimension: String,
        available: String,
    },

    #[error("{0}")]
    Core(#[from] emoarc_core::Error),

    #[error("{0}")]
    Csv(#[from] csv::Error),

    #[error("{0}")]
    Json(#[from] serde_json::Error),

    #[error("{path}: {source}")]
    Config {
        path: PathBuf,
        source: toml::de::Error,
    },

    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Exit code of the error category: 2 usage, 3 io, 4 format,
    /// 5 degenerate-arc, 6 empty-window, 1 anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            Error::Io(_) => 3,
            Error::Csv(e) if matches!(e.kind(), csv::ErrorKind::Io(_)) => 3,
            Error::Parse { .. }
            | Error::MissingColumn { .. }
            | Error::EmotionAbsent { .. }
            | Error::DimensionAbsent { .. }
            | Error::Csv(_)
            | Error::Json(_)
            | Error::Config { .. } => 4,
            Error::Core(core) => match core.category() {
                "degenerate-arc" => 5,
                "empty-window" => 6,
                "invalid-config" => 2,
                _ => 4,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
