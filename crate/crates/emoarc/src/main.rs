//! Command-line front end: corpus ingestion, arc generation, evaluation,
//! parameter sweeps, classifier simulation and synthetic data generation.
//!
//! Every command accepts `--config run.toml`; explicit flags override the
//! file. Outputs embed the fully resolved configuration, so any file can
//! be reproduced from its own provenance. Exit codes: 0 success, 2 usage,
//! 3 io, 4 format, 5 degenerate-arc, 6 empty-window.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use emoarc::arcio;
use emoarc::corpusio::{self, ColumnMapping};
use emoarc::error::{Error, Result};
use emoarc::lexio::{self, LexiconFormat};
use emoarc::report::{self, ReportKind};
use emoarc::runcfg::{
    parse_error_model, parse_list, parse_oov, parse_order, parse_pair, parse_scoring,
    parse_tau_mode, resolve_lex_range, resolve_scheme, RunConfig,
};
use emoarc::runner::run_sweep;

use emoarc_core::arc::{gold_arc, predicted_arc, standardize, ArcConfig};
use emoarc_core::corpus::LabeledCorpus;
use emoarc_core::eval::{spearman, GridThreshold, SweepGrid, SweepMethod};
use emoarc_core::lexicon::EmotionLexicon;
use emoarc_core::oracle::OracleConfig;
use emoarc_core::synth::{generate, SynthSpec};

#[derive(Parser)]
#[command(
    name = "emoarc",
    version,
    about = "Generate and evaluate emotion arcs from labeled or lexicon-scored text"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the gold arc from human instance labels
    Gold(GoldArgs),
    /// Build a predicted arc by lexicon scoring (optionally evaluate it)
    Lexo(LexoArgs),
    /// Spearman correlation between two exported arcs
    Eval(EvalArgs),
    /// Sweep bins, OOV policies, thresholds and scoring modes per lexicon
    Sweep(SweepArgs),
    /// Accuracy curve of a simulated instance-level classifier
    Oracle(OracleArgs),
    /// Generate a synthetic corpus and companion lexicon
    Synth(SynthArgs),
}

#[derive(Args, Clone)]
struct CorpusFlags {
    /// Corpus file: .tsv/.csv with a header row, or .jsonl
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Column (or JSONL field) holding the instance text
    #[arg(long)]
    text_col: Option<String>,
    /// Column holding the numeric gold label
    #[arg(long)]
    label_col: Option<String>,
    /// Column holding unique instance ids (defaults to the row index)
    #[arg(long)]
    id_col: Option<String>,
    /// Column holding numeric timestamps (required with --order timestamp)
    #[arg(long)]
    time_col: Option<String>,
    /// Categorical label set, e.g. "-3,-2,-1,0,1,2,3"
    #[arg(long, allow_hyphen_values = true)]
    labels: Option<String>,
    /// Continuous label interval "lo:hi"
    #[arg(long, allow_hyphen_values = true)]
    label_range: Option<String>,
    /// Instance ordering: as-given | timestamp | shuffle
    #[arg(long)]
    order: Option<String>,
    /// Seed for --order shuffle
    #[arg(long)]
    shuffle_seed: Option<u64>,
    /// Emotion name recorded in outputs
    #[arg(long)]
    emotion: Option<String>,
    /// TOML run config; explicit flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
}

struct ResolvedCorpus {
    corpus: LabeledCorpus,
    id: String,
    provenance: serde_json::Value,
}

fn resolve_corpus(flags: &CorpusFlags, cfg: &RunConfig) -> Result<ResolvedCorpus> {
    let section = cfg.corpus.clone().unwrap_or_default();
    let path = flags
        .corpus
        .clone()
        .or(section.path)
        .ok_or_else(|| Error::Usage("a corpus file is required (--corpus)".into()))?;
    let mapping = ColumnMapping {
        text: flags
            .text_col
            .clone()
            .or(section.text_col)
            .unwrap_or_else(|| "text".into()),
        label: flags
            .label_col
            .clone()
            .or(section.label_col)
            .unwrap_or_else(|| "label".into()),
        id: flags.id_col.clone().or(section.id_col),
        timestamp: flags.time_col.clone().or(section.time_col),
    };
    let labels = match &flags.labels {
        Some(list) => Some(parse_list::<f64>(list)?),
        None => section.labels,
    };
    let range = match &flags.label_range {
        Some(pair) => Some(parse_pair(pair)?),
        None => section.range,
    };
    let scheme = resolve_scheme(labels, range)?;
    let shuffle_seed = flags.shuffle_seed.or(section.shuffle_seed);
    let order_token = flags
        .order
        .clone()
        .or(section.order)
        .unwrap_or_else(|| "as-given".into());
    let order = parse_order(&order_token, shuffle_seed)?;
    let emotion = flags
        .emotion
        .clone()
        .or(section.emotion)
        .unwrap_or_else(|| "emotion".into());

    let corpus = corpusio::load_corpus(&path, &mapping, scheme.clone(), &emotion, order)?;
    let id = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("corpus")
        .to_string();
    let provenance = serde_json::json!({
        "path": path,
        "mapping": mapping,
        "scheme": scheme,
        "order": order,
        "emotion": emotion,
        "instances": corpus.len(),
    });
    Ok(ResolvedCorpus {
        corpus,
        id,
        provenance,
    })
}

#[derive(Args, Clone)]
struct LexiconFlags {
    /// Lexicon file; repeat for multi-lexicon sweeps
    #[arg(long = "lexicon")]
    lexicons: Vec<PathBuf>,
    /// Lexicon format: two-column | nrc-emolex | nrc-vad
    #[arg(long)]
    lex_format: Option<String>,
    /// Emotion (EmoLex) or dimension (VAD) to load from the file
    #[arg(long)]
    lex_emotion: Option<String>,
    /// Continuous score interval "lo:hi" (two-column/VAD default -1:1)
    #[arg(long, allow_hyphen_values = true)]
    lex_range: Option<String>,
    /// Categorical score set, e.g. "0,1" (EmoLex default)
    #[arg(long, allow_hyphen_values = true)]
    lex_labels: Option<String>,
}

fn resolve_lexicons(
    flags: &LexiconFlags,
    cfg: &RunConfig,
    default_emotion: &str,
) -> Result<(Vec<(String, EmotionLexicon)>, serde_json::Value)> {
    struct Spec {
        path: PathBuf,
        format: LexiconFormat,
        emotion: String,
        range: Option<emoarc_core::lexicon::ScoreRange>,
    }

    let mut specs = Vec::new();
    if flags.lexicons.is_empty() {
        for section in &cfg.lexicon {
            let format = LexiconFormat::parse(section.format.as_deref().unwrap_or("two-column"))?;
            specs.push(Spec {
                path: section.path.clone(),
                format,
                emotion: section
                    .emotion
                    .clone()
                    .unwrap_or_else(|| default_emotion.to_string()),
                range: resolve_lex_range(section.labels.clone(), section.range)?,
            });
        }
    } else {
        let format = LexiconFormat::parse(flags.lex_format.as_deref().unwrap_or("two-column"))?;
        let labels = flags
            .lex_labels
            .as_deref()
            .map(parse_list::<f64>)
            .transpose()?;
        let range = flags.lex_range.as_deref().map(parse_pair).transpose()?;
        for path in &flags.lexicons {
            specs.push(Spec {
                path: path.clone(),
                format,
                emotion: flags
                    .lex_emotion
                    .clone()
                    .unwrap_or_else(|| default_emotion.to_string()),
                range: resolve_lex_range(labels.clone(), range)?,
            });
        }
    }
    if specs.is_empty() {
        return Err(Error::Usage(
            "at least one lexicon is required (--lexicon or [[lexicon]] in the config)".into(),
        ));
    }

    let mut lexicons = Vec::new();
    let mut provenance = Vec::new();
    for spec in specs {
        let range = spec.range.unwrap_or_else(|| spec.format.default_range());
        let load = lexio::load_lexicon(&spec.path, spec.format, &spec.emotion, &range)?;
        if load.duplicates > 0 {
            eprintln!(
                "warning: {}: {} duplicate terms (last occurrence wins)",
                spec.path.display(),
                load.duplicates
            );
        }
        if load.multiword_rejected > 0 {
            eprintln!(
                "warning: {}: {} multi-word entries dropped",
                spec.path.display(),
                load.multiword_rejected
            );
        }
        if load.lexicon.is_empty() {
            eprintln!("warning: {}: lexicon has zero entries", spec.path.display());
        }
        let id = spec
            .path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("lexicon")
            .to_string();
        provenance.push(serde_json::json!({
            "path": spec.path,
            "format": format!("{:?}", spec.format),
            "emotion": spec.emotion,
            "range": range,
            "entries": load.lexicon.len(),
            "duplicates": load.duplicates,
            "multiword_rejected": load.multiword_rejected,
        }));
        lexicons.push((id, load.lexicon));
    }
    Ok((lexicons, serde_json::Value::Array(provenance)))
}

fn out_path(explicit: Option<PathBuf>, cfg: &RunConfig, default_name: &str) -> Result<PathBuf> {
    match explicit {
        Some(path) => Ok(path),
        None => {
            let dir = cfg.output_dir.clone().unwrap_or_else(|| PathBuf::from("."));
            std::fs::create_dir_all(&dir)?;
            Ok(dir.join(default_name))
        }
    }
}

#[derive(Args)]
struct GoldArgs {
    #[command(flatten)]
    corpus: CorpusFlags,
    /// Window size in instances
    #[arg(long)]
    bin: Option<usize>,
    /// Window advance between arc points
    #[arg(long)]
    stride: Option<usize>,
    /// Z-score the arc before writing
    #[arg(long)]
    standardize: bool,
    /// Output CSV (a .json provenance sidecar is written alongside)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn cmd_gold(args: GoldArgs) -> Result<()> {
    let cfg = RunConfig::load(args.corpus.config.as_deref())?;
    let arc_section = cfg.arc.clone().unwrap_or_default();
    let resolved = resolve_corpus(&args.corpus, &cfg)?;
    let bin = args
        .bin
        .or(arc_section.bin)
        .ok_or_else(|| Error::Usage("a bin size is required (--bin)".into()))?;
    let stride = args.stride.or(arc_section.stride).unwrap_or(1);
    let standardize_out = args.standardize || arc_section.standardize.unwrap_or(false);

    let config = ArcConfig::new(bin).with_stride(stride);
    let mut arc = gold_arc(&resolved.corpus, &config)?;
    if standardize_out {
        arc = standardize(&arc)?;
    }
    let out = out_path(args.out, &cfg, "gold_arc.csv")?;
    let provenance = serde_json::json!({
        "command": "gold",
        "version": env!("CARGO_PKG_VERSION"),
        "corpus": resolved.provenance,
        "bin": bin,
        "stride": stride,
        "standardize": standardize_out,
    });
    arcio::write_arc_csv(&arc, &out, &provenance)?;
    println!("windows: {}", arc.len());
    println!("wrote {}", out.display());
    Ok(())
}

#[derive(Args)]
struct LexoArgs {
    #[command(flatten)]
    corpus: CorpusFlags,
    #[command(flatten)]
    lexicon: LexiconFlags,
    #[arg(long)]
    bin: Option<usize>,
    #[arg(long)]
    stride: Option<usize>,
    /// OOV policy: drop-na | zero
    #[arg(long)]
    oov: Option<String>,
    /// Scoring granularity: instance-mean | word-pool
    #[arg(long)]
    scoring: Option<String>,
    /// Minimum association score for lexicon entries to participate
    #[arg(long)]
    tau: Option<f64>,
    /// Threshold mode: auto | magnitude | signed
    #[arg(long)]
    tau_mode: Option<String>,
    #[arg(long)]
    standardize: bool,
    /// Also build the gold arc and print Spearman rho against it
    #[arg(long)]
    eval: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn cmd_lexo(args: LexoArgs) -> Result<()> {
    let cfg = RunConfig::load(args.corpus.config.as_deref())?;
    let arc_section = cfg.arc.clone().unwrap_or_default();
    let resolved = resolve_corpus(&args.corpus, &cfg)?;
    let (lexicons, lex_provenance) =
        resolve_lexicons(&args.lexicon, &cfg, resolved.corpus.emotion())?;
    if lexicons.len() != 1 {
        return Err(Error::Usage(
            "lexo builds one arc from one lexicon; use sweep for several".into(),
        ));
    }
    let (lex_id, lexicon) = &lexicons[0];

    let bin = args
        .bin
        .or(arc_section.bin)
        .ok_or_else(|| Error::Usage("a bin size is required (--bin)".into()))?;
    let stride = args.stride.or(arc_section.stride).unwrap_or(1);
    let oov = parse_oov(args.oov.as_deref().or(arc_section.oov.as_deref()).unwrap_or("drop-na"))?;
    let scoring = parse_scoring(
        args.scoring
            .as_deref()
            .or(arc_section.scoring.as_deref())
            .unwrap_or("instance-mean"),
    )?;
    let tau = args.tau.or(arc_section.tau);
    let tau_mode = parse_tau_mode(
        args.tau_mode
            .as_deref()
            .or(arc_section.tau_mode.as_deref())
            .unwrap_or("auto"),
    )?;
    let standardize_out =
        args.standardize || arc_section.standardize.unwrap_or(false);

    let mut config = ArcConfig::new(bin)
        .with_stride(stride)
        .with_oov(oov)
        .with_scoring(scoring);
    if let Some(tau) = tau {
        config = config.with_threshold(GridThreshold { tau, mode: tau_mode }.resolve(lexicon));
    }

    let mut arc = predicted_arc(&resolved.corpus, lexicon, &config)?;
    if standardize_out {
        arc = standardize(&arc)?;
    }
    let out = out_path(args.out, &cfg, "lexo_arc.csv")?;
    let provenance = serde_json::json!({
        "command": "lexo",
        "version": env!("CARGO_PKG_VERSION"),
        "corpus": resolved.provenance,
        "lexicons": lex_provenance,
        "lexicon_id": lex_id,
        "config": config,
        "standardize": standardize_out,
    });
    arcio::write_arc_csv(&arc, &out, &provenance)?;
    println!("windows: {}", arc.len());
    if args.eval {
        let gold = gold_arc(&resolved.corpus, &config)?;
        let rho = emoarc_core::eval::spearman_arcs(&gold, &arc)?;
        println!("rho: {rho:.6}");
    }
    println!("wrote {}", out.display());
    Ok(())
}

#[derive(Args)]
struct EvalArgs {
    /// Gold arc CSV
    #[arg(long)]
    gold: PathBuf,
    /// Predicted arc CSV
    #[arg(long)]
    pred: PathBuf,
}

fn cmd_eval(args: EvalArgs) -> Result<()> {
    let (gold_starts, gold_values) = arcio::read_arc_series(&args.gold)?;
    let (pred_starts, pred_values) = arcio::read_arc_series(&args.pred)?;
    if gold_starts != pred_starts {
        return Err(Error::Core(emoarc_core::Error::MisalignedArcs));
    }
    let rho = spearman(&gold_values, &pred_values)?;
    println!("rho: {rho:.6}");
    Ok(())
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    corpus: CorpusFlags,
    #[command(flatten)]
    lexicon: LexiconFlags,
    /// Comma-separated bin sizes (default 1,10,50,100,200,300)
    #[arg(long)]
    bins: Option<String>,
    #[arg(long)]
    stride: Option<usize>,
    /// Comma-separated OOV policies (default drop-na,zero)
    #[arg(long)]
    oov: Option<String>,
    /// Comma-separated thresholds (default 0)
    #[arg(long)]
    thresholds: Option<String>,
    /// Threshold mode: auto | magnitude | signed
    #[arg(long)]
    tau_mode: Option<String>,
    /// Comma-separated scoring granularities (default instance-mean)
    #[arg(long)]
    scoring: Option<String>,
    /// reference: bins 1,10,50,100,200,300 at stride 1, both OOV policies
    #[arg(long)]
    preset: Option<String>,
    /// Worker pool size (results are identical at any size)
    #[arg(long)]
    threads: Option<usize>,
    /// Master seed echoed into provenance
    #[arg(long)]
    seed: Option<u64>,
    /// Report CSV (a .json mirror is written alongside)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let cfg = RunConfig::load(args.corpus.config.as_deref())?;
    let sweep_section = cfg.sweep.clone().unwrap_or_default();
    let resolved = resolve_corpus(&args.corpus, &cfg)?;
    let (lexicons, lex_provenance) =
        resolve_lexicons(&args.lexicon, &cfg, resolved.corpus.emotion())?;

    if let Some(preset) = &args.preset {
        if preset != "reference" {
            return Err(Error::Usage(format!("unknown preset {preset:?}")));
        }
    }
    let reference = SweepGrid::reference_preset(vec![]);
    let bins = match &args.bins {
        Some(list) => parse_list::<usize>(list)?,
        None => sweep_section.bins.clone().unwrap_or(reference.bin_sizes),
    };
    let stride = args.stride.or(sweep_section.stride).unwrap_or(1);
    let oov = match &args.oov {
        Some(list) => list.split(',').map(parse_oov).collect::<Result<Vec<_>>>()?,
        None => match &sweep_section.oov {
            Some(tokens) => tokens
                .iter()
                .map(|t| parse_oov(t))
                .collect::<Result<Vec<_>>>()?,
            None => reference.oov_policies,
        },
    };
    let tau_mode = parse_tau_mode(
        args.tau_mode
            .as_deref()
            .or(sweep_section.tau_mode.as_deref())
            .unwrap_or("auto"),
    )?;
    let thresholds = match &args.thresholds {
        Some(list) => parse_list::<f64>(list)?,
        None => sweep_section.taus.clone().unwrap_or_else(|| vec![0.0]),
    }
    .into_iter()
    .map(|tau| GridThreshold { tau, mode: tau_mode })
    .collect();
    let scoring = match &args.scoring {
        Some(list) => list
            .split(',')
            .map(parse_scoring)
            .collect::<Result<Vec<_>>>()?,
        None => match &sweep_section.scoring {
            Some(tokens) => tokens
                .iter()
                .map(|t| parse_scoring(t))
                .collect::<Result<Vec<_>>>()?,
            None => reference.scoring_modes,
        },
    };
    let threads = args.threads.or(sweep_section.threads).unwrap_or(1);
    let seed = args.seed.or(cfg.master_seed).unwrap_or(0);

    let grid = SweepGrid {
        lexicons,
        scoring_modes: scoring,
        oov_policies: oov,
        thresholds,
        bin_sizes: bins,
        stride,
    };
    let reports = run_sweep(&resolved.id, &resolved.corpus, &grid, &SweepMethod::Lexo, threads)?;

    let out = out_path(args.out, &cfg, "sweep_report.csv")?;
    let provenance = serde_json::json!({
        "command": "sweep",
        "version": env!("CARGO_PKG_VERSION"),
        "corpus": resolved.provenance,
        "lexicons": lex_provenance,
        "bins": grid.bin_sizes,
        "stride": grid.stride,
        "oov": grid.oov_policies,
        "thresholds": grid.thresholds,
        "scoring": grid.scoring_modes,
        "seed": seed,
    });
    report::write_report_csv(&reports, ReportKind::Lexo, &out, &provenance)?;
    report::write_report_json(&reports, &out.with_extension("json"), &provenance)?;
    let ok = reports.iter().filter(|r| r.rho.is_some()).count();
    println!("cells: {} (ok: {ok}, failed: {})", reports.len(), reports.len() - ok);
    println!("wrote {}", out.display());
    Ok(())
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    corpus: CorpusFlags,
    /// Comma-separated instance-level accuracies in [0,1]
    #[arg(long)]
    accuracies: Option<String>,
    /// Comma-separated bin sizes (default 1,10,50,100,200,300)
    #[arg(long)]
    bins: Option<String>,
    #[arg(long)]
    stride: Option<usize>,
    /// Independent simulations per cell
    #[arg(long)]
    trials: Option<u32>,
    /// Master simulation seed
    #[arg(long)]
    seed: Option<u64>,
    /// Incorrect-label model: uniform | distance-weighted
    #[arg(long)]
    error_model: Option<String>,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn cmd_oracle(args: OracleArgs) -> Result<()> {
    let cfg = RunConfig::load(args.corpus.config.as_deref())?;
    let oracle_section = cfg.oracle.clone().unwrap_or_default();
    let resolved = resolve_corpus(&args.corpus, &cfg)?;

    let accuracies = match &args.accuracies {
        Some(list) => parse_list::<f64>(list)?,
        None => oracle_section.accuracies.clone().ok_or_else(|| {
            Error::Usage("accuracies are required (--accuracies or [oracle] accuracies)".into())
        })?,
    };
    let bins = match &args.bins {
        Some(list) => parse_list::<usize>(list)?,
        None => oracle_section
            .bins
            .clone()
            .unwrap_or_else(|| vec![1, 10, 50, 100, 200, 300]),
    };
    let stride = args.stride.unwrap_or(1);
    let trials = args.trials.or(oracle_section.trials).unwrap_or(20);
    let seed = args.seed.or(cfg.master_seed).unwrap_or(0);
    let threads = args.threads.or(oracle_section.threads).unwrap_or(1);
    let error_model = parse_error_model(
        args.error_model
            .as_deref()
            .or(oracle_section.error_model.as_deref())
            .unwrap_or("uniform"),
    )?;

    let template = OracleConfig::new(1.0, seed, trials).with_error_model(error_model);
    let grid = SweepGrid {
        lexicons: vec![],
        scoring_modes: vec![emoarc_core::arc::ScoringMode::InstanceMean],
        oov_policies: vec![emoarc_core::arc::OovPolicy::DropNa],
        thresholds: vec![GridThreshold::auto(0.0)],
        bin_sizes: bins.clone(),
        stride,
    };
    let method = SweepMethod::Oracle {
        accuracies: accuracies.clone(),
        template: template.clone(),
    };
    let reports = run_sweep(&resolved.id, &resolved.corpus, &grid, &method, threads)?;

    let out = out_path(args.out, &cfg, "oracle_report.csv")?;
    let provenance = serde_json::json!({
        "command": "oracle",
        "version": env!("CARGO_PKG_VERSION"),
        "corpus": resolved.provenance,
        "accuracies": accuracies,
        "bins": bins,
        "stride": stride,
        "trials": trials,
        "seed": seed,
        "error_model": error_model,
    });
    report::write_report_csv(&reports, ReportKind::Oracle, &out, &provenance)?;
    report::write_report_json(&reports, &out.with_extension("json"), &provenance)?;
    let ok = reports.iter().filter(|r| r.rho.is_some()).count();
    println!("cells: {} (ok: {ok}, failed: {})", reports.len(), reports.len() - ok);
    println!("wrote {}", out.display());
    Ok(())
}

#[derive(Args)]
struct SynthArgs {
    /// Number of instances
    #[arg(long)]
    n: usize,
    /// Categorical label set, e.g. "-3,-2,-1,0,1,2,3"
    #[arg(long, allow_hyphen_values = true)]
    labels: String,
    /// Vocabulary size (one block per label plus a noise block)
    #[arg(long, default_value_t = 160)]
    vocab: usize,
    /// Tokens per instance
    #[arg(long, default_value_t = 8)]
    tokens: usize,
    /// Fraction of tokens drawn from the gold label's block, in [0,1]
    #[arg(long)]
    signal: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Corpus TSV to write
    #[arg(long)]
    out_corpus: PathBuf,
    /// Companion lexicon TSV to write
    #[arg(long)]
    out_lexicon: PathBuf,
}

fn cmd_synth(args: SynthArgs) -> Result<()> {
    let labels = parse_list::<f64>(&args.labels)?;
    let spec = SynthSpec {
        n_instances: args.n,
        scheme: emoarc_core::corpus::LabelScheme::categorical(labels),
        vocab_size: args.vocab,
        tokens_per_instance: args.tokens,
        label_signal: args.signal,
        seed: args.seed,
    };
    let (corpus, lexicon) = generate(&spec)?;
    corpusio::save_corpus_tsv(&corpus, &args.out_corpus)?;
    lexio::save_lexicon_tsv(&lexicon, &args.out_lexicon)?;
    let provenance = serde_json::json!({
        "command": "synth",
        "version": env!("CARGO_PKG_VERSION"),
        "spec": spec,
        "corpus": args.out_corpus,
        "lexicon": args.out_lexicon,
        "lexicon_entries": lexicon.len(),
    });
    let sidecar = arcio::sidecar_path(&args.out_corpus);
    std::fs::write(&sidecar, format!("{:#}\n", provenance))?;
    println!(
        "instances: {} lexicon entries: {}",
        corpus.len(),
        lexicon.len()
    );
    println!("wrote {}", args.out_corpus.display());
    println!("wrote {}", args.out_lexicon.display());
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gold(args) => cmd_gold(args),
        Command::Lexo(args) => cmd_lexo(args),
        Command::Eval(args) => cmd_eval(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Synth(args) => cmd_synth(args),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
