//! `bedpose`: file-based driver for the pressure-map pose pipeline.
//!
//! Every command reads and writes documented files only. Failures print a
//! single line `error: <class>: <message>` to stderr and exit with the
//! class-specific code.

use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bedpose::colormap::{colormap_fixture_json, Colormap};
use bedpose::config::{layered, parse_override};
use bedpose::dataset::{load_dataset, write_dataset, Dataset};
use bedpose::evaluation::{
    build_report_tables, evaluate, significance_test, summarize_runs, EvalSample, EvaluationReport,
};
use bedpose::experiment::{
    build_pipeline, cleaned_sequences, dataset_fingerprint, evaluate_predictions, prepare_data_with_split, report_meta,
    run_fingerprint, train_models, ExperimentConfig,
};
use bedpose::inference::PredictionFile;
use bedpose::plot::write_ap_plots;
use bedpose::pressure::{split_leave_subjects_out, DatasetSplit, PressureFrame};
use bedpose::skeleton::KeypointSet;
use bedpose::synthetic::{generate_dataset, SyntheticSidecar};
use bedpose::training::{load_train_state, save_train_state, ModelState, TrainState, LOG_HEADER};
use bedpose::{Error, Result};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Version of the on-disk formats (manifests, annotations, checkpoints,
/// predictions, reports) this build reads and writes.
const FORMAT_VERSION: u32 = 1;

const USAGE_EXIT: u8 = 2;

/// Raised from the epoch callback to stop training at `--max-epochs`.
const PAUSED: &str = "paused";

#[derive(Parser)]
#[command(name = "bedpose", version, about = "Pose estimation from in-bed pressure maps")]
struct Cli {
    /// Cap on worker threads (default: one per core).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    /// More log output on stderr (repeat for more).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct ConfigArgs {
    /// JSON config file layered over the defaults.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Override one key, e.g. `--set optimizer.epochs=5` (repeatable).
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
}

#[derive(Args)]
struct DataArgs {
    /// Dataset manifest.
    #[arg(long, value_name = "FILE")]
    manifest: PathBuf,

    /// Split file written by `split`; defaults to holding out the last
    /// `split.n_test` subjects.
    #[arg(long, value_name = "FILE")]
    split: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a labelled synthetic dataset.
    Synth {
        /// Output directory (manifest.json, frames/, annotations/, synthetic.json).
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
        /// Generator seed; identical seeds give identical datasets.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of subjects.
        #[arg(long)]
        subjects: Option<usize>,
        /// Frames per subject, spread over its sequences.
        #[arg(long)]
        frames_per_subject: Option<usize>,
        /// Sequences per subject (posture families cycle across them).
        #[arg(long)]
        sequences_per_subject: Option<usize>,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Apply the cleaning chain and write the cleaned dataset.
    Preprocess {
        /// Dataset manifest.
        #[arg(long, value_name = "FILE")]
        manifest: PathBuf,
        /// Output directory; also receives preprocess_log.json.
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Hold out the last subjects of a dataset.
    Split {
        /// Dataset manifest.
        #[arg(long, value_name = "FILE")]
        manifest: PathBuf,
        /// Number of held-out subjects.
        #[arg(long)]
        n_test: Option<usize>,
        /// Output file (default: split.json next to the manifest).
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Train one pipeline mode; resumes from the run's latest checkpoint.
    Train {
        #[command(flatten)]
        data: DataArgs,
        /// Run directory (config.json, run.json, log.csv, checkpoints/).
        #[arg(long, value_name = "DIR")]
        run_dir: PathBuf,
        /// frozen_estimator | retrained_estimator | polish_frozen | polish_retrain
        #[arg(long)]
        mode: Option<String>,
        /// Epochs per training phase; overrides the config.
        #[arg(long)]
        epochs: Option<usize>,
        /// Optimizer seed; overrides the config.
        #[arg(long)]
        seed: Option<u64>,
        /// Discard an existing checkpoint instead of resuming.
        #[arg(long)]
        fresh: bool,
        /// Stop after this many epochs in this invocation; a later `train`
        /// on the same run dir continues from there.
        #[arg(long, value_name = "N")]
        max_epochs: Option<usize>,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Predict keypoints for every frame of the held-out subjects.
    Predict {
        #[command(flatten)]
        data: DataArgs,
        /// Trained run; without it the networks keep their initial weights.
        #[arg(long, value_name = "DIR")]
        run_dir: Option<PathBuf>,
        /// Pipeline mode; overrides the config.
        #[arg(long)]
        mode: Option<String>,
        /// Predict all subjects, not just the held-out ones.
        #[arg(long)]
        all_subjects: bool,
        /// Output directory, one JSON file per sequence.
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// Evaluate on the held-out subjects and write report.json,
    /// ap_curve.csv and tables.txt.
    Eval {
        #[command(flatten)]
        data: DataArgs,
        /// Trained run; without it (and without --predictions) the
        /// networks keep their initial weights.
        #[arg(long, value_name = "DIR")]
        run_dir: Option<PathBuf>,
        /// Evaluate prediction files from `predict` instead of running the
        /// networks.
        #[arg(long, value_name = "DIR", conflicts_with = "run_dir")]
        predictions: Option<PathBuf>,
        /// Pipeline mode; overrides the config.
        #[arg(long)]
        mode: Option<String>,
        /// Report label (default: the mode label).
        #[arg(long)]
        label: Option<String>,
        /// Output directory (default: <run-dir>/eval).
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        #[command(flatten)]
        cfg: ConfigArgs,
    },
    /// AP-versus-threshold panels, one per joint plus a combined grid.
    Plot {
        /// report.json files; one curve each.
        #[arg(required = true, value_name = "REPORT")]
        reports: Vec<PathBuf>,
        /// Output directory for the PNG panels.
        #[arg(long, value_name = "DIR")]
        out: PathBuf,
    },
    /// Per-joint and ablation tables; optional significance test between
    /// two groups of repeated runs.
    Report {
        /// Reports of the first group; one table row each.
        #[arg(required = true, value_name = "REPORT")]
        reports: Vec<PathBuf>,
        /// Second group of reports, compared against the first with a
        /// Mann-Whitney test on AP5.
        #[arg(long, num_args = 1.., value_name = "REPORT")]
        versus: Vec<PathBuf>,
        /// Directory for tables.txt, per_joint.csv, ablation.csv and
        /// significance.json.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Print the program and file-format versions.
    Version,
    /// List the built-in colormaps.
    Colormaps {
        /// Print the colormap fixture JSON instead.
        #[arg(long)]
        fixture: bool,
    },
}

/// Contents of `run.json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
struct RunInfo {
    format_version: u32,
    mode: String,
    manifest: PathBuf,
    dataset_fingerprint: String,
    run_fingerprint: String,
    seeds: BTreeMap<String, u64>,
    split: DatasetSplit,
    completed: bool,
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::Schema(format!("{}: {e}", path.display())))
}

fn create_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))
}

/// Defaults, then `base` (a stored run config), then `--config`, then
/// `--set`, then the command's own flags.
fn resolve_config(base: Option<&Path>, args: &ConfigArgs, flags: &[(&str, Option<Value>)]) -> Result<ExperimentConfig> {
    let mut layers = Vec::new();
    for path in base.into_iter().chain(args.config.as_deref()) {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        layers.push(serde_json::from_str(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?);
    }
    for s in &args.set {
        layers.push(parse_override(s)?);
    }
    for (key, value) in flags {
        if let Some(v) = value {
            layers.push(parse_override(&format!("{key}={v}"))?);
        }
    }
    layered(None, &layers)
}

fn flag<T: Serialize>(key: &'static str, v: &Option<T>) -> (&'static str, Option<Value>) {
    (key, v.as_ref().map(|x| serde_json::to_value(x).expect("serializable")))
}

fn load_split(ds: &Dataset, cfg: &ExperimentConfig, path: Option<&Path>) -> Result<DatasetSplit> {
    match path {
        Some(p) => read_json(p),
        None => split_leave_subjects_out(&ds.subjects(), cfg.split.n_test),
    }
}

fn run_config_path(run_dir: Option<&Path>) -> Option<PathBuf> {
    run_dir.map(|d| d.join("config.json"))
}

/// Trained weights of a run, or freshly initialized ones.
fn load_models(cfg: &ExperimentConfig, run_dir: Option<&Path>) -> Result<ModelState> {
    let setup = cfg.setup()?;
    match run_dir {
        Some(dir) => {
            let info: RunInfo = read_json(&dir.join("run.json"))?;
            if !info.completed {
                log::warn!("run {} has not finished training; using its latest checkpoint", dir.display());
            }
            Ok(load_train_state(&dir.join("checkpoints").join("latest"), &setup)?.models)
        }
        None => ModelState::init(&setup),
    }
}

fn cmd_synth(
    out: &Path,
    seed: Option<u64>,
    subjects: Option<usize>,
    frames: Option<usize>,
    sequences: Option<usize>,
    args: &ConfigArgs,
) -> Result<()> {
    let cfg = resolve_config(
        None,
        args,
        &[
            flag("synthetic.seed", &seed),
            flag("synthetic.n_subjects", &subjects),
            flag("synthetic.frames_per_subject", &frames),
            flag("synthetic.sequences_per_subject", &sequences),
        ],
    )?;
    let data = generate_dataset(&cfg.synthetic)?;
    let manifest = write_dataset(out, &data.dataset)?;
    let sidecar = SyntheticSidecar { config: cfg.synthetic.clone(), subjects: data.subjects, scenes: data.scenes };
    write_json(&out.join("synthetic.json"), &sidecar)?;
    println!("{}", manifest.display());
    Ok(())
}

fn cmd_preprocess(manifest: &Path, out: &Path, args: &ConfigArgs) -> Result<()> {
    let cfg = resolve_config(None, args, &[])?;
    let ds = load_dataset(manifest)?;
    if ds.preprocessing.is_some() {
        return Err(Error::invalid(format!("{} is already preprocessed", manifest.display())));
    }
    let (sequences, log) = cleaned_sequences(&ds, &cfg)?;
    let cleaned = Dataset { sequences, preprocessing: Some(cfg.preprocessing.clone()), ..ds };
    let path = write_dataset(out, &cleaned)?;
    write_json(&out.join("preprocess_log.json"), &log)?;
    println!("{}", path.display());
    Ok(())
}

fn cmd_split(manifest: &Path, n_test: Option<usize>, out: Option<PathBuf>, args: &ConfigArgs) -> Result<()> {
    let cfg = resolve_config(None, args, &[flag("split.n_test", &n_test)])?;
    let ds = load_dataset(manifest)?;
    let split = split_leave_subjects_out(&ds.subjects(), cfg.split.n_test)?;
    let out = out.unwrap_or_else(|| manifest.parent().unwrap_or(Path::new(".")).join("split.json"));
    write_json(&out, &split)?;
    println!("{}", out.display());
    Ok(())
}

/// Drops log rows past the checkpoint, which a crash between appending the
/// log and saving the state can leave behind.
fn truncate_log(path: &Path, iteration: u64) -> Result<()> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut kept = String::new();
    for (i, line) in text.lines().enumerate() {
        let keep =
            i == 0 || line.split(',').next().and_then(|v| v.parse::<u64>().ok()).is_some_and(|it| it <= iteration);
        if keep {
            kept.push_str(line);
            kept.push('\n');
        }
    }
    std::fs::write(path, kept).map_err(|e| Error::io(path, e))
}

fn append_log(path: &Path, lines: &str) -> Result<()> {
    let mut f = OpenOptions::new().append(true).open(path).map_err(|e| Error::io(path, e))?;
    f.write_all(lines.as_bytes()).map_err(|e| Error::io(path, e))
}

#[allow(clippy::too_many_arguments)]
fn cmd_train(
    data: &DataArgs,
    run_dir: &Path,
    mode: Option<String>,
    epochs: Option<usize>,
    seed: Option<u64>,
    fresh: bool,
    max_epochs: Option<usize>,
    args: &ConfigArgs,
) -> Result<()> {
    let ckpt = run_dir.join("checkpoints").join("latest");
    let config_path = run_dir.join("config.json");
    let resuming = !fresh && ckpt.join("state.json").exists();
    let base = resuming.then_some(config_path.as_path());
    let cfg = resolve_config(
        base,
        args,
        &[flag("mode", &mode), flag("optimizer.epochs", &epochs), flag("optimizer.seed", &seed)],
    )?;
    let setup = cfg.setup()?;
    let ds = load_dataset(&data.manifest)?;
    let split = load_split(&ds, &cfg, data.split.as_deref())?;
    let info = RunInfo {
        format_version: FORMAT_VERSION,
        mode: setup.mode.label(),
        manifest: data.manifest.clone(),
        dataset_fingerprint: dataset_fingerprint(&ds),
        run_fingerprint: run_fingerprint(&cfg, &ds),
        seeds: BTreeMap::from([("optimizer".to_string(), cfg.optimizer.seed)]),
        split: split.clone(),
        completed: false,
    };
    let run_json = run_dir.join("run.json");
    let log_path = run_dir.join("log.csv");
    let resume = if resuming {
        let stored: ExperimentConfig = read_json(&config_path)?;
        if stored != cfg {
            return Err(Error::Checkpoint(format!(
                "configuration differs from {}; pass --fresh or use another run dir",
                config_path.display()
            )));
        }
        let prev: RunInfo = read_json(&run_json)?;
        if prev.dataset_fingerprint != info.dataset_fingerprint || prev.split != info.split {
            return Err(Error::Checkpoint(format!(
                "dataset or split differs from the one {} was trained on",
                run_dir.display()
            )));
        }
        let state = load_train_state(&ckpt, &setup)?;
        truncate_log(&log_path, state.iteration)?;
        log::info!("resuming at phase {} epoch {} (iteration {})", state.phase, state.next_epoch, state.iteration);
        Some(state)
    } else {
        create_dir(run_dir)?;
        std::fs::write(&config_path, cfg.to_json()).map_err(|e| Error::io(&config_path, e))?;
        std::fs::write(&log_path, format!("{LOG_HEADER}\n")).map_err(|e| Error::io(&log_path, e))?;
        write_json(&run_dir.join("split.json"), &split)?;
        None
    };
    write_json(&run_json, &info)?;
    let prepared = prepare_data_with_split(&ds, &cfg, split)?;
    log::info!("training {} on {} frames", setup.mode.label(), prepared.train_frames.len());
    let save = |state: &TrainState| save_train_state(&ckpt, &setup, state);
    let mut epochs_run = 0;
    let result = train_models(&prepared, &cfg, resume, |state, rows| {
        let lines: String = rows.iter().map(|r| r.csv_line() + "\n").collect();
        append_log(&log_path, &lines)?;
        if let Some(r) = rows.last() {
            log::info!("epoch {} loss {:.6}", r.epoch, r.loss_total);
        }
        save(state)?;
        epochs_run += 1;
        match max_epochs {
            Some(m) if epochs_run >= m => Err(Error::Training(PAUSED.into())),
            _ => Ok(()),
        }
    });
    let state = match result {
        Ok((state, _)) => state,
        Err(Error::Training(m)) if m == PAUSED => {
            println!("paused after {epochs_run} epochs: {}", run_dir.display());
            return Ok(());
        }
        Err(e) => return Err(e),
    };
    save(&state)?;
    write_json(&run_json, &RunInfo { completed: true, ..info })?;
    println!("{}", run_dir.display());
    Ok(())
}

fn cmd_predict(
    data: &DataArgs,
    run_dir: Option<&Path>,
    mode: Option<String>,
    all_subjects: bool,
    out: &Path,
    args: &ConfigArgs,
) -> Result<()> {
    let cfg = resolve_config(run_config_path(run_dir).as_deref(), args, &[flag("mode", &mode)])?;
    let ds = load_dataset(&data.manifest)?;
    let split = load_split(&ds, &cfg, data.split.as_deref())?;
    let pipeline = build_pipeline(&cfg, &load_models(&cfg, run_dir)?)?;
    let (sequences, _) = cleaned_sequences(&ds, &cfg)?;
    let frames: Vec<&PressureFrame> = sequences
        .iter()
        .filter(|s| all_subjects || split.test_subjects.contains(&s.subject_id))
        .flat_map(|s| s.frames.iter())
        .collect();
    let preds = pipeline.predict(&frames)?;
    create_dir(out)?;
    for file in PredictionFile::group(&preds) {
        file.write(&out.join(format!("{}_{}.json", file.subject_id, file.sequence_id)))?;
    }
    println!("{}", out.display());
    Ok(())
}

fn read_predictions(dir: &Path) -> Result<BTreeMap<(String, String, usize), KeypointSet>> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| Error::io(dir, e))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    let mut map = BTreeMap::new();
    for p in paths {
        let file = PredictionFile::read(&p)?;
        for fp in &file.predictions {
            map.insert((file.subject_id.clone(), file.sequence_id.clone(), fp.frame_index), fp.to_keypoints()?);
        }
    }
    Ok(map)
}

#[allow(clippy::too_many_arguments)]
fn cmd_eval(
    data: &DataArgs,
    run_dir: Option<&Path>,
    predictions: Option<&Path>,
    mode: Option<String>,
    label: Option<String>,
    out: Option<PathBuf>,
    args: &ConfigArgs,
) -> Result<()> {
    let cfg = resolve_config(run_config_path(run_dir).as_deref(), args, &[flag("mode", &mode)])?;
    let out = match (out, run_dir) {
        (Some(o), _) => o,
        (None, Some(r)) => r.join("eval"),
        (None, None) => return Err(Error::invalid("--out is required without --run-dir")),
    };
    let ds = load_dataset(&data.manifest)?;
    let split = load_split(&ds, &cfg, data.split.as_deref())?;
    let prepared = prepare_data_with_split(&ds, &cfg, split)?;
    let mut meta = report_meta(&cfg, &ds)?;
    if let Some(l) = label {
        meta.label = l;
    }
    let report = match predictions {
        Some(dir) => {
            let preds = read_predictions(dir)?;
            let samples = prepared
                .test_frames
                .iter()
                .map(|f| {
                    let key = (f.subject_id.clone(), f.sequence_id.clone(), f.frame_index);
                    let pred = *preds.get(&key).ok_or_else(|| {
                        Error::Evaluation(format!("{} has no prediction for frame {}", dir.display(), f.label()))
                    })?;
                    Ok(EvalSample { frame_id: f.label(), pred, gt: f.keypoints.expect("labelled frames only") })
                })
                .collect::<Result<Vec<_>>>()?;
            evaluate(&samples, prepared.sensor_pitch_mm, &cfg.evaluation, &meta)?
        }
        None => {
            let pipeline = build_pipeline(&cfg, &load_models(&cfg, run_dir)?)?;
            let frames: Vec<&PressureFrame> = prepared.test_frames.iter().collect();
            let preds = pipeline.predict(&frames)?;
            evaluate_predictions(&prepared.test_frames, &preds, prepared.sensor_pitch_mm, &cfg.evaluation, &meta)?
        }
    };
    report.write(&out)?;
    println!("AP5 {} AP10 {} MPJPE {:.1} mm", fmt_ap(report.ap5), fmt_ap(report.ap10), report.mpjpe_mm);
    println!("{}", out.display());
    Ok(())
}

fn fmt_ap(v: Option<f64>) -> String {
    v.map_or("-".into(), |x| format!("{x:.4}"))
}

fn read_reports(paths: &[PathBuf]) -> Result<Vec<EvaluationReport>> {
    paths.iter().map(|p| EvaluationReport::read(p)).collect()
}

fn cmd_plot(reports: &[PathBuf], out: &Path) -> Result<()> {
    let paths = write_ap_plots(&read_reports(reports)?, out)?;
    for p in paths {
        println!("{}", p.display());
    }
    Ok(())
}

fn cmd_report(reports: &[PathBuf], versus: &[PathBuf], out: Option<&Path>) -> Result<()> {
    let a = read_reports(reports)?;
    let tables = build_report_tables(&a);
    let mut text = tables.text();
    let mut significance = None;
    if !versus.is_empty() {
        let b = read_reports(versus)?;
        let (sa, sb) = (summarize_runs(&a)?, summarize_runs(&b)?);
        let mw = significance_test(&a, &b)?;
        text.push_str(&format!(
            "\nMann-Whitney on AP5: {} (mean {:.4}) vs {} (mean {:.4}): U = {}, p = {:.4}{}\n",
            sa.label,
            sa.mean_ap5,
            sb.label,
            sb.mean_ap5,
            mw.u,
            mw.p_value,
            if mw.significant() { ", significant at 0.05" } else { "" }
        ));
        significance = Some(serde_json::json!({ "a": sa, "b": sb, "test": mw }));
    }
    print!("{text}");
    if let Some(dir) = out {
        create_dir(dir)?;
        for (name, body) in
            [("tables.txt", &text), ("per_joint.csv", &tables.per_joint_csv), ("ablation.csv", &tables.ablation_csv)]
        {
            let p = dir.join(name);
            std::fs::write(&p, body).map_err(|e| Error::io(&p, e))?;
        }
        if let Some(s) = significance {
            write_json(&dir.join("significance.json"), &s)?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<()> {
    if let Some(n) = cli.jobs {
        if n == 0 {
            return Err(Error::invalid("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::invalid(format!("cannot size the thread pool: {e}")))?;
    }
    match cli.command {
        Command::Synth { out, seed, subjects, frames_per_subject, sequences_per_subject, cfg } => {
            cmd_synth(&out, seed, subjects, frames_per_subject, sequences_per_subject, &cfg)
        }
        Command::Preprocess { manifest, out, cfg } => cmd_preprocess(&manifest, &out, &cfg),
        Command::Split { manifest, n_test, out, cfg } => cmd_split(&manifest, n_test, out, &cfg),
        Command::Train { data, run_dir, mode, epochs, seed, fresh, max_epochs, cfg } => {
            cmd_train(&data, &run_dir, mode, epochs, seed, fresh, max_epochs, &cfg)
        }
        Command::Predict { data, run_dir, mode, all_subjects, out, cfg } => {
            cmd_predict(&data, run_dir.as_deref(), mode, all_subjects, &out, &cfg)
        }
        Command::Eval { data, run_dir, predictions, mode, label, out, cfg } => {
            cmd_eval(&data, run_dir.as_deref(), predictions.as_deref(), mode, label, out, &cfg)
        }
        Command::Plot { reports, out } => cmd_plot(&reports, &out),
        Command::Report { reports, versus, out } => cmd_report(&reports, &versus, out.as_deref()),
        Command::Version => {
            println!("bedpose {}", env!("CARGO_PKG_VERSION"));
            println!("format-version {FORMAT_VERSION}");
            Ok(())
        }
        Command::Colormaps { fixture } => {
            if fixture {
                print!("{}", colormap_fixture_json());
            } else {
                for name in Colormap::builtin_names() {
                    println!("{name}");
                }
            }
            Ok(())
        }
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.render().to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error: usage: {} (see --help)", one_line(first));
            return ExitCode::from(USAGE_EXIT);
        }
    };
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new().filter_level(level).format_timestamp(None).init();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}: {}", e.class(), one_line(&e.detail()));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
