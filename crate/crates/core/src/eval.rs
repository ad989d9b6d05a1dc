//! Spearman correlation between arcs and multi-dimensional parameter sweeps.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::arc::{gold_arc, predicted_arc, ArcConfig, EmotionArc, OovPolicy, ScoringMode};
use crate::corpus::LabeledCorpus;
use crate::error::{Error, Result};
use crate::lexicon::{EmotionLexicon, Granularity, ThresholdMode, ThresholdSpec};
use crate::oracle::{self, OracleConfig};

/// Average (fractional) ranks, 1-based. Tied values share the mean of the
/// positions they occupy, the standard treatment for tie-corrected
/// Spearman.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut ranks = alloc::vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        // positions i..=j (0-based) hold one tie group
        let rank = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            ranks[idx] = rank;
        }
        i = j + 1;
    }
    ranks
}

fn is_constant(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[0] == w[1])
}

/// Spearman rank correlation: Pearson correlation of the two average-rank
/// vectors. Identical rank vectors short-circuit to exactly 1.0 (their
/// correlation in exact arithmetic). Constant input is rejected rather
/// than silently reported as 0.
pub fn spearman(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.len() < 2 {
        return Err(Error::DegenerateArc(String::from("fewer than two windows")));
    }
    if is_constant(a) || is_constant(b) {
        return Err(Error::DegenerateArc(String::from("constant values")));
    }
    let ra = average_ranks(a);
    let rb = average_ranks(b);
    if ra == rb {
        return Ok(1.0);
    }
    let n = ra.len() as f64;
    // both rank vectors have mean (n + 1) / 2
    let mean = (n + 1.0) / 2.0;
    let mut num = 0.0;
    let mut ssa = 0.0;
    let mut ssb = 0.0;
    for (x, y) in ra.iter().zip(&rb) {
        let dx = *x - mean;
        let dy = *y - mean;
        num += dx * dy;
        ssa += dx * dx;
        ssb += dy * dy;
    }
    let rho = num / (libm::sqrt(ssa) * libm::sqrt(ssb));
    Ok(rho.clamp(-1.0, 1.0))
}

/// Spearman between two arcs covering the same windows.
pub fn spearman_arcs(a: &EmotionArc, b: &EmotionArc) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.window_starts() != b.window_starts() {
        return Err(Error::MisalignedArcs);
    }
    spearman(a.values(), b.values())
}

/// Outcome of one evaluated cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellStatus {
    Ok,
    DegenerateArc,
    EmptyWindow,
    InvalidConfig,
    Format,
}

impl CellStatus {
    pub fn token(&self) -> &'static str {
        match self {
            CellStatus::Ok => "ok",
            CellStatus::DegenerateArc => "degenerate-arc",
            CellStatus::EmptyWindow => "empty-window",
            CellStatus::InvalidConfig => "invalid-config",
            CellStatus::Format => "format",
        }
    }
}

impl From<&Error> for CellStatus {
    fn from(err: &Error) -> Self {
        match err.category() {
            "empty-window" => CellStatus::EmptyWindow,
            "degenerate-arc" => CellStatus::DegenerateArc,
            "invalid-config" => CellStatus::InvalidConfig,
            _ => CellStatus::Format,
        }
    }
}

/// Identification of what a report row evaluates; everything the arcs
/// themselves do not carry.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ReportMeta {
    pub corpus: String,
    pub emotion: String,
    pub method: String,
    pub lexicon: Option<String>,
    pub lexicon_granularity: Option<Granularity>,
    pub accuracy: Option<f64>,
    pub trials: Option<u32>,
}

/// One (corpus, method, configuration) evaluation cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub corpus: String,
    pub emotion: String,
    pub method: String,
    pub lexicon: Option<String>,
    pub lexicon_granularity: Option<Granularity>,
    pub scoring: Option<ScoringMode>,
    pub oov: Option<OovPolicy>,
    pub tau: Option<f64>,
    pub tau_mode: Option<ThresholdMode>,
    pub bin: usize,
    pub stride: usize,
    pub accuracy: Option<f64>,
    pub trials: Option<u32>,
    pub n_windows: usize,
    /// Spearman rho; for oracle cells the mean over trials. `None` for
    /// failed cells.
    pub rho: Option<f64>,
    pub rho_min: Option<f64>,
    pub rho_max: Option<f64>,
    pub standardized_gold: bool,
    pub standardized_pred: bool,
    pub status: CellStatus,
}

impl EvalReport {
    pub(crate) fn from_config(meta: &ReportMeta, config: &ArcConfig, lexo: bool) -> Self {
        EvalReport {
            corpus: meta.corpus.clone(),
            emotion: meta.emotion.clone(),
            method: meta.method.clone(),
            lexicon: meta.lexicon.clone(),
            lexicon_granularity: meta.lexicon_granularity,
            scoring: lexo.then_some(config.scoring),
            oov: lexo.then_some(config.oov_policy),
            tau: config.threshold.as_ref().map(|t| t.tau),
            tau_mode: config.threshold.as_ref().map(|t| t.mode),
            bin: config.bin_size,
            stride: config.stride,
            accuracy: meta.accuracy,
            trials: meta.trials,
            n_windows: 0,
            rho: None,
            rho_min: None,
            rho_max: None,
            standardized_gold: false,
            standardized_pred: false,
            status: CellStatus::Ok,
        }
    }

    /// Report for a cell that could not be evaluated.
    pub fn failed(meta: &ReportMeta, config: &ArcConfig, lexo: bool, err: &Error) -> Self {
        let mut report = Self::from_config(meta, config, lexo);
        report.status = CellStatus::from(err);
        report
    }
}

/// Correlate a predicted arc against a gold arc and assemble the full
/// report row. Both arcs may be raw or standardized in any combination;
/// ranks are unaffected, and the report records what was compared.
pub fn evaluate_pair(
    gold: &EmotionArc,
    pred: &EmotionArc,
    meta: &ReportMeta,
) -> Result<EvalReport> {
    let rho = spearman_arcs(gold, pred)?;
    let lexo = meta.method != "oracle";
    let mut report = EvalReport::from_config(meta, pred.config(), lexo);
    report.n_windows = pred.len();
    report.rho = Some(rho);
    report.standardized_gold = gold.is_standardized();
    report.standardized_pred = pred.is_standardized();
    Ok(report)
}

/// Threshold grid entry; `mode: None` resolves per lexicon (magnitude for
/// signed ranges, signed for unipolar ones).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridThreshold {
    pub tau: f64,
    pub mode: Option<ThresholdMode>,
}

impl GridThreshold {
    pub fn auto(tau: f64) -> Self {
        GridThreshold { tau, mode: None }
    }

    pub fn resolve(&self, lex: &EmotionLexicon) -> ThresholdSpec {
        ThresholdSpec::new(self.tau, self.mode.unwrap_or_else(|| lex.default_threshold_mode()))
    }
}

/// The experiment matrix: every combination of lexicon, scoring
/// granularity, OOV policy, threshold and bin size becomes one cell.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepGrid {
    pub lexicons: Vec<(String, EmotionLexicon)>,
    pub scoring_modes: Vec<ScoringMode>,
    pub oov_policies: Vec<OovPolicy>,
    pub thresholds: Vec<GridThreshold>,
    pub bin_sizes: Vec<usize>,
    pub stride: usize,
}

impl SweepGrid {
    /// The reference grid: bins 1, 10, 50, 100, 200, 300 at stride 1,
    /// both OOV policies, instance-mean scoring, no thresholding.
    pub fn reference_preset(lexicons: Vec<(String, EmotionLexicon)>) -> Self {
        SweepGrid {
            lexicons,
            scoring_modes: alloc::vec![ScoringMode::InstanceMean],
            oov_policies: alloc::vec![OovPolicy::DropNa, OovPolicy::Zero],
            thresholds: alloc::vec![GridThreshold::auto(0.0)],
            bin_sizes: alloc::vec![1, 10, 50, 100, 200, 300],
            stride: 1,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.scoring_modes.is_empty()
            || self.oov_policies.is_empty()
            || self.thresholds.is_empty()
            || self.bin_sizes.is_empty()
        {
            return Err(Error::InvalidConfig(String::from(
                "every sweep dimension needs at least one value",
            )));
        }
        if self.stride == 0 {
            return Err(Error::InvalidConfig(String::from("stride must be positive")));
        }
        Ok(())
    }
}

/// Which arc generation method a sweep exercises.
#[derive(Clone, Debug, PartialEq)]
pub enum SweepMethod {
    /// Lexicon-only scoring over the grid's lexicons.
    Lexo,
    /// Simulated instance-level classifiers at the given accuracies.
    Oracle {
        accuracies: Vec<f64>,
        template: OracleConfig,
    },
}

/// One expanded sweep cell. Cells are independent and may be evaluated on
/// any worker pool; the report list order is the expansion order.
#[derive(Clone, Debug, PartialEq)]
pub enum SweepCell<'g> {
    Lexo {
        lexicon_id: &'g str,
        lexicon: &'g EmotionLexicon,
        config: ArcConfig,
    },
    Oracle {
        accuracy: f64,
        template: OracleConfig,
        config: ArcConfig,
    },
}

/// Expand a grid into its cells in a fixed nested order
/// (lexicon, scoring, oov, threshold, bin — or accuracy, bin).
pub fn expand_cells<'g>(grid: &'g SweepGrid, method: &SweepMethod) -> Vec<SweepCell<'g>> {
    let mut cells = Vec::new();
    match method {
        SweepMethod::Lexo => {
            for (id, lex) in &grid.lexicons {
                for &scoring in &grid.scoring_modes {
                    for &oov in &grid.oov_policies {
                        for thr in &grid.thresholds {
                            for &bin in &grid.bin_sizes {
                                let config = ArcConfig {
                                    bin_size: bin,
                                    stride: grid.stride,
                                    oov_policy: oov,
                                    scoring,
                                    threshold: Some(thr.resolve(lex)),
                                };
                                cells.push(SweepCell::Lexo {
                                    lexicon_id: id,
                                    lexicon: lex,
                                    config,
                                });
                            }
                        }
                    }
                }
            }
        }
        SweepMethod::Oracle {
            accuracies,
            template,
        } => {
            for &p in accuracies {
                for &bin in &grid.bin_sizes {
                    let config = ArcConfig {
                        bin_size: bin,
                        stride: grid.stride,
                        oov_policy: OovPolicy::DropNa,
                        scoring: ScoringMode::InstanceMean,
                        threshold: None,
                    };
                    cells.push(SweepCell::Oracle {
                        accuracy: p,
                        template: template.clone(),
                        config,
                    });
                }
            }
        }
    }
    cells
}

/// Evaluate one cell. Pure: the result depends only on the corpus bytes
/// and the cell parameters, so parallel and serial execution agree.
pub fn run_cell(corpus_id: &str, corpus: &LabeledCorpus, cell: &SweepCell<'_>) -> EvalReport {
    match cell {
        SweepCell::Lexo {
            lexicon_id,
            lexicon,
            config,
        } => {
            let meta = ReportMeta {
                corpus: corpus_id.to_string(),
                emotion: corpus.emotion().to_string(),
                method: String::from("lexo"),
                lexicon: Some((*lexicon_id).to_string()),
                lexicon_granularity: Some(lexicon.granularity()),
                accuracy: None,
                trials: None,
            };
            let outcome = (|| {
                let gold = gold_arc(corpus, config)?;
                let pred = predicted_arc(corpus, lexicon, config)?;
                evaluate_pair(&gold, &pred, &meta)
            })();
            outcome.unwrap_or_else(|err| EvalReport::failed(&meta, config, true, &err))
        }
        SweepCell::Oracle {
            accuracy,
            template,
            config,
        } => oracle::run_oracle_cell(corpus_id, corpus, *accuracy, config, template),
    }
}

/// Run every cell of the grid sequentially. Cells that fail (degenerate
/// arcs, empty thresholded lexicons, oversized bins) are reported with a
/// status, never dropped.
pub fn sweep(
    corpus_id: &str,
    corpus: &LabeledCorpus,
    grid: &SweepGrid,
    method: &SweepMethod,
) -> Result<Vec<EvalReport>> {
    grid.validate()?;
    if matches!(method, SweepMethod::Lexo) && grid.lexicons.is_empty() {
        return Err(Error::InvalidConfig(String::from(
            "a lexicon sweep needs at least one lexicon",
        )));
    }
    let cells = expand_cells(grid, method);
    Ok(cells
        .iter()
        .map(|cell| run_cell(corpus_id, corpus, cell))
        .collect())
}
