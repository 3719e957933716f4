//! Command implementations for the `vocform` binary: form generation,
//! cluster inspection, response scoring, and resource validation.
//!
//! Exit codes: 0 success, 1 usage, 2 resource error, 3 pipeline error.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};

use vocform::assemble::{render_form, Difficulty, RenderFormat};
use vocform::pipeline::{process_passage, render_clusters, render_pools, RunConfig, RunRecord};
use vocform::resources::{load_bundle, validate_bundle, ResourceError};
use vocform::score::{score_responses, ResponseSheet};

#[derive(Debug, Parser)]
#[command(
    name = "vocform",
    version,
    about = "Topical vocabulary test form generator"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate test forms (machine, print, key, and run record) per passage.
    Generate(Box<GenerateArgs>),
    /// Run the pipeline up to topic detection and dump the ranked clusters.
    Clusters(ClustersArgs),
    /// Score one response sheet, or a directory of sheets, against a key file.
    Score(ScoreArgs),
    /// Load a resource bundle and print counts, coverage, and warnings.
    ValidateResources(ValidateArgs),
}

#[derive(Debug, Args, Default)]
pub struct GenerateArgs {
    /// Resource manifest (TOML).
    #[arg(long, env = "VOCFORM_MANIFEST")]
    pub manifest: Option<PathBuf>,
    /// Passage text file; repeat for several passages.
    #[arg(long = "passage")]
    pub passages: Vec<PathBuf>,
    /// Output directory for emitted files.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    /// Topic label for the instruction line; without it PRINT output is
    /// held back and the run record carries suggestions.
    #[arg(long)]
    pub topic_label: Option<String>,
    /// easy or hard; repeat for both (default: both).
    #[arg(long = "difficulty")]
    pub difficulties: Vec<Difficulty>,
    /// Existing run config or run record (JSON) to start from; flags
    /// override fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub cluster_seed: Option<u64>,
    #[arg(long)]
    pub nt_seed: Option<u64>,
    #[arg(long)]
    pub layout_seed: Option<u64>,
    #[arg(long)]
    pub quota: Option<usize>,
    #[arg(long)]
    pub n_tid: Option<usize>,
    #[arg(long)]
    pub n_tod: Option<usize>,
    #[arg(long)]
    pub n_nt: Option<usize>,
    #[arg(long)]
    pub anchor_clusters: Option<usize>,
    #[arg(long)]
    pub tod_pool_size: Option<usize>,
    #[arg(long)]
    pub nt_pool_size: Option<usize>,
    #[arg(long)]
    pub theta_cos: Option<f64>,
    #[arg(long)]
    pub theta_pmi: Option<f64>,
    #[arg(long)]
    pub damping: Option<f64>,
    #[arg(long)]
    pub max_iterations: Option<usize>,
    #[arg(long)]
    pub convergence_window: Option<usize>,
    /// Explicit affinity propagation preference (default: median).
    #[arg(long)]
    pub preference: Option<f64>,
    #[arg(long)]
    pub chunk_size: Option<usize>,
    /// Print the TID/TOD/NT pools as tab-separated diagnostics.
    #[arg(long)]
    pub dump_pools: bool,
}

#[derive(Debug, Args)]
pub struct ClustersArgs {
    #[arg(long, env = "VOCFORM_MANIFEST")]
    pub manifest: Option<PathBuf>,
    #[arg(long)]
    pub passage: PathBuf,
    /// Print only the top N clusters.
    #[arg(long)]
    pub top: Option<usize>,
    #[arg(long)]
    pub cluster_seed: Option<u64>,
    #[arg(long)]
    pub damping: Option<f64>,
    #[arg(long)]
    pub max_iterations: Option<usize>,
    #[arg(long)]
    pub convergence_window: Option<usize>,
    #[arg(long)]
    pub preference: Option<f64>,
    #[arg(long)]
    pub chunk_size: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ScoreArgs {
    /// Key file (machine-format form with categories and keys).
    #[arg(long)]
    pub form: PathBuf,
    /// Response sheet (.json or .csv), or a directory of sheets.
    #[arg(long)]
    pub responses: PathBuf,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long, env = "VOCFORM_MANIFEST")]
    pub manifest: Option<PathBuf>,
}

/// Error classification for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitKind {
    Usage,
    Resource,
    Pipeline,
}

impl ExitKind {
    pub fn code(self) -> i32 {
        match self {
            Self::Usage => 1,
            Self::Resource => 2,
            Self::Pipeline => 3,
        }
    }
}

/// Classify an error chain into an exit code.
pub fn exit_kind(error: &anyhow::Error) -> ExitKind {
    if error.downcast_ref::<UsageError>().is_some() {
        return ExitKind::Usage;
    }
    for cause in error.chain() {
        if cause.downcast_ref::<ResourceError>().is_some() {
            return ExitKind::Resource;
        }
    }
    ExitKind::Pipeline
}

#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(message: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(UsageError(message.into()))
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate(args) => run_generate(*args),
        Command::Clusters(args) => run_clusters(args),
        Command::Score(args) => run_score(args),
        Command::ValidateResources(args) => run_validate(args),
    }
}

/// Build the effective run config from an optional config/record file plus
/// flag overrides.
pub fn resolve_config(args: &GenerateArgs) -> Result<RunConfig> {
    let mut config = match &args.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .with_context(|| format!("parsing config {}", path.display()))?;
            let config_value = value.get("config").cloned().unwrap_or(value);
            serde_json::from_value::<RunConfig>(config_value)
                .with_context(|| format!("parsing config {}", path.display()))?
        }
        None => {
            let manifest = args
                .manifest
                .clone()
                .ok_or_else(|| usage("--manifest is required (or set VOCFORM_MANIFEST)"))?;
            RunConfig::new(manifest, Vec::new(), PathBuf::from("out"))
        }
    };
    if let Some(manifest) = &args.manifest {
        config.manifest = manifest.clone();
    }
    if !args.passages.is_empty() {
        config.passages = args.passages.clone();
    }
    if let Some(out_dir) = &args.out_dir {
        config.out_dir = out_dir.clone();
    }
    if args.topic_label.is_some() {
        config.topic_label = args.topic_label.clone();
    }
    if !args.difficulties.is_empty() {
        config.difficulties = args.difficulties.clone();
    }
    let set = |target: &mut usize, source: Option<usize>| {
        if let Some(value) = source {
            *target = value;
        }
    };
    let setf = |target: &mut f64, source: Option<f64>| {
        if let Some(value) = source {
            *target = value;
        }
    };
    if let Some(seed) = args.cluster_seed {
        config.seeds.clustering = seed;
    }
    if let Some(seed) = args.nt_seed {
        config.seeds.nt_sample = seed;
    }
    if let Some(seed) = args.layout_seed {
        config.seeds.layout = seed;
    }
    set(&mut config.quota, args.quota);
    set(&mut config.n_tid, args.n_tid);
    set(&mut config.n_tod, args.n_tod);
    set(&mut config.n_nt, args.n_nt);
    set(&mut config.anchor_clusters, args.anchor_clusters);
    set(&mut config.tod_pool_size, args.tod_pool_size);
    set(&mut config.nt_pool_size, args.nt_pool_size);
    set(&mut config.max_iterations, args.max_iterations);
    set(&mut config.convergence_window, args.convergence_window);
    set(&mut config.chunk_size, args.chunk_size);
    setf(&mut config.theta_cos, args.theta_cos);
    setf(&mut config.theta_pmi, args.theta_pmi);
    setf(&mut config.damping, args.damping);
    if args.preference.is_some() {
        config.preference = args.preference;
    }
    if config.passages.is_empty() {
        return Err(usage("at least one --passage is required"));
    }
    Ok(config)
}

/// Output file paths for one passage and difficulty:
/// form (machine, unkeyed), print sheet, key file, run record.
pub fn output_paths(out_dir: &Path, stem: &str, difficulty: Difficulty) -> [PathBuf; 4] {
    let base = format!("{stem}.{difficulty}");
    [
        out_dir.join(format!("{base}.form.json")),
        out_dir.join(format!("{base}.print.txt")),
        out_dir.join(format!("{base}.key.json")),
        out_dir.join(format!("{base}.record.json")),
    ]
}

pub fn run_generate(args: GenerateArgs) -> Result<()> {
    let config = resolve_config(&args)?;
    let bundle = load_bundle(&config.manifest)?;
    fs::create_dir_all(&config.out_dir)
        .with_context(|| format!("creating {}", config.out_dir.display()))?;

    for passage_path in &config.passages {
        let text = fs::read_to_string(passage_path)
            .with_context(|| format!("reading passage {}", passage_path.display()))?;
        let stem = passage_stem(passage_path);
        let artifacts = process_passage(&bundle, &text, &stem, &config)?;

        for warning in &artifacts.warnings {
            eprintln!("warning [{stem}]: {warning}");
        }
        if config.topic_label.is_none() {
            eprintln!(
                "note [{stem}]: no --topic-label; print form withheld; suggestions: {}",
                artifacts.suggested_labels.join(", ")
            );
        }
        if args.dump_pools {
            print!("{}", render_pools(&artifacts.pools));
        }

        for form in &artifacts.forms {
            let difficulty = form.spec.difficulty;
            let [form_path, print_path, key_path, record_path] =
                output_paths(&config.out_dir, &stem, difficulty);

            let mut record_config = config.clone();
            record_config.passages = vec![passage_path.clone()];
            let record = RunRecord {
                config: record_config,
                resource_checksums: bundle.manifest.checksums(),
                passage_sha256: artifacts.passage_sha256.clone(),
                scarcity: artifacts.pools.scarcity.clone(),
                warnings: artifacts.warnings.clone(),
                suggested_labels: if config.topic_label.is_none() {
                    artifacts.suggested_labels.clone()
                } else {
                    Vec::new()
                },
            };

            write_file(
                &form_path,
                &render_form(form, RenderFormat::Machine, false)?,
            )?;
            write_file(&key_path, &render_form(form, RenderFormat::Machine, true)?)?;
            if config.topic_label.is_some() {
                write_file(&print_path, &render_form(form, RenderFormat::Print, false)?)?;
            }
            let mut record_json = serde_json::to_string_pretty(&record)?;
            record_json.push('\n');
            write_file(&record_path, &record_json)?;

            println!(
                "{stem} [{difficulty}]: {} items ({} TID / {} TOD / {} NT){}",
                form.items.len(),
                count_category(form, "TID"),
                count_category(form, "TOD"),
                count_category(form, "NT"),
                if form.shared_terms.is_empty() {
                    String::new()
                } else {
                    format!(", {} shared with sibling forms", form.shared_terms.len())
                }
            );
        }
    }
    Ok(())
}

fn count_category(form: &vocform::assemble::TestForm, name: &str) -> usize {
    form.items
        .iter()
        .filter(|i| i.category.to_string() == name)
        .count()
}

pub fn run_clusters(args: ClustersArgs) -> Result<()> {
    let manifest = args
        .manifest
        .ok_or_else(|| usage("--manifest is required (or set VOCFORM_MANIFEST)"))?;
    let mut config = RunConfig::new(manifest, vec![args.passage.clone()], PathBuf::from("out"));
    if let Some(seed) = args.cluster_seed {
        config.seeds.clustering = seed;
    }
    if let Some(damping) = args.damping {
        config.damping = damping;
    }
    if let Some(max_iterations) = args.max_iterations {
        config.max_iterations = max_iterations;
    }
    if let Some(window) = args.convergence_window {
        config.convergence_window = window;
    }
    if args.preference.is_some() {
        config.preference = args.preference;
    }
    if let Some(chunk_size) = args.chunk_size {
        config.chunk_size = chunk_size;
    }
    let bundle = load_bundle(&config.manifest)?;
    let text = fs::read_to_string(&args.passage)
        .with_context(|| format!("reading passage {}", args.passage.display()))?;
    let artifacts = process_passage(&bundle, &text, &passage_stem(&args.passage), &config)?;
    print!("{}", render_clusters(&artifacts.model, args.top));
    Ok(())
}

pub fn run_score(args: ScoreArgs) -> Result<()> {
    let form_text = fs::read_to_string(&args.form)
        .with_context(|| format!("reading form {}", args.form.display()))?;
    let form = vocform::assemble::parse_machine_form(&form_text)?;

    let sheet_paths: Vec<PathBuf> = if args.responses.is_dir() {
        let mut paths: Vec<PathBuf> = fs::read_dir(&args.responses)
            .with_context(|| format!("reading {}", args.responses.display()))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|path| {
                matches!(
                    path.extension().and_then(|e| e.to_str()),
                    Some("json") | Some("csv")
                )
            })
            .collect();
        paths.sort();
        if paths.is_empty() {
            return Err(anyhow!(
                "no .json or .csv sheets in {}",
                args.responses.display()
            ));
        }
        paths
    } else {
        vec![args.responses.clone()]
    };

    let mut proportions = Vec::new();
    for path in &sheet_paths {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading responses {}", path.display()))?;
        let sheet = match path.extension().and_then(|e| e.to_str()) {
            Some("csv") => ResponseSheet::from_csv(&text)?,
            _ => ResponseSheet::from_json(&text)?,
        };
        let report = score_responses(&form, &sheet)?;
        if sheet_paths.len() > 1 {
            println!("== {}", path.display());
        }
        print!("{report}");
        proportions.push(report.proportion_correct);
    }
    if proportions.len() > 1 {
        let mean = proportions.iter().sum::<f64>() / proportions.len() as f64;
        println!(
            "aggregate: {} sheets, mean proportion correct {:.4}",
            proportions.len(),
            mean
        );
    }
    Ok(())
}

pub fn run_validate(args: ValidateArgs) -> Result<()> {
    let manifest = args
        .manifest
        .ok_or_else(|| usage("--manifest is required (or set VOCFORM_MANIFEST)"))?;
    let bundle = load_bundle(&manifest)?;
    let report = validate_bundle(&bundle);
    print!("{report}");
    let checksums: BTreeMap<String, String> = bundle.manifest.checksums();
    println!("checksums:");
    for (role, sha) in checksums {
        println!("  {role}: {sha}");
    }
    Ok(())
}

fn passage_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "passage".to_owned())
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}
