//! Parallel sweep execution. Cells are pure functions of the corpus and
//! cell parameters and results are collected in expansion order, so any
//! worker-pool size yields byte-identical reports.

use rayon::prelude::*;

use emoarc_core::corpus::LabeledCorpus;
use emoarc_core::eval::{expand_cells, run_cell, EvalReport, SweepGrid, SweepMethod};

use crate::error::{Error, Result};

/// Run every grid cell on a pool of `threads` workers (1 = sequential).
pub fn run_sweep(
    corpus_id: &str,
    corpus: &LabeledCorpus,
    grid: &SweepGrid,
    method: &SweepMethod,
    threads: usize,
) -> Result<Vec<EvalReport>> {
    grid.validate()?;
    let cells = expand_cells(grid, method);
    if threads <= 1 {
        return Ok(cells
            .iter()
            .map(|cell| run_cell(corpus_id, corpus, cell))
            .collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Usage(format!("cannot build worker pool: {e}")))?;
    Ok(pool.install(|| {
        cells
            .par_iter()
            .map(|cell| run_cell(corpus_id, corpus, cell))
            .collect()
    }))
}
