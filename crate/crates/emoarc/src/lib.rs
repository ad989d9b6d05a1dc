//! File formats, configuration and parallel execution around
//! [`emoarc_core`]: lexicon and corpus ingestion, arc and report export,
//! run configuration, and the worker-pool sweep runner backing the
//! `emoarc` command-line tool.

pub mod arcio;
pub mod corpusio;
pub mod error;
pub mod lexio;
pub mod report;
pub mod runcfg;
pub mod runner;

pub use error::{Error, Result};
