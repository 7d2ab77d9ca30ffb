//! `horizons` — temporal-network diffusion analytics from the command line.
//!
//! Subcommands: `generate` (synthetic datasets), `horizon` (one seed's
//! reachability), `compare` (two-model sweep report), `components`
//! (aggregated component histogram).
//!
//! Exit codes: 0 success, 1 input/data errors, 2 usage/config errors.
//! Results go to stdout as JSON or CSV; diagnostics go to stderr only.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use horizons::analysis::{compare_models, largest_components, SeedTimeRule};
use horizons::graph::TemporalHypergraph;
use horizons::ingest::{
    apply_window, parse_csv, parse_jsonl, records_to_defs, write_csv, write_jsonl, ChannelRecord,
};
use horizons::reach::{static_horizon, temporal_horizon, Mode, Strictness, TraversalPolicy};
use horizons::report::{render_csv, render_json, summary_line};
use horizons::synth::{generate, SynthParams};
use horizons::time::{TimeStamp, TimeWindow};

#[derive(Parser)]
#[command(
    name = "horizons",
    version,
    about = "Temporal-hypergraph diffusion analytics for channel-based communication networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a deterministic synthetic channel dataset
    Generate(GenerateArgs),
    /// Compute one seed's diffusion horizon
    Horizon(HorizonArgs),
    /// Sweep all seeds under both models and export the comparison report
    Compare(CompareArgs),
    /// Histogram of connected-component sizes of the aggregated graph
    Components(ComponentsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DataFormat {
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    Respecting,
    Ignoring,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Point,
    Interval,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RuleArg {
    WindowStart,
    FirstAppearance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct GenerateArgs {
    /// Number of participants in the vertex universe
    #[arg(long, default_value_t = 37_103)]
    vertices: usize,
    /// Number of channels to generate
    #[arg(long, default_value_t = 309_740)]
    channels: usize,
    #[arg(long, default_value_t = 0)]
    window_start: i64,
    #[arg(long, default_value_t = 28 * 24 * 3600)]
    window_end: i64,
    /// Probability that a channel involves more than two participants
    #[arg(long, default_value_t = 0.3398)]
    multi_share: f64,
    /// Mean size of multi-party channels
    #[arg(long, default_value_t = 4.0)]
    tail_mean: f64,
    /// Mean channel duration in ticks
    #[arg(long, default_value_t = 86_400.0)]
    mean_duration: f64,
    /// Smallest channel size ever generated
    #[arg(long, default_value_t = 2)]
    min_size: usize,
    /// RNG seed; identical seeds yield byte-identical datasets
    #[arg(long = "rng-seed", visible_alias = "seed", default_value_t = 0)]
    rng_seed: u64,
    /// Output dataset format
    #[arg(long, value_enum, default_value_t = DataFormat::Jsonl)]
    format: DataFormat,
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    out: Option<PathBuf>,
}

/// Flags shared by every dataset-reading subcommand.
#[derive(Args)]
struct InputOpts {
    /// Input dataset file
    #[arg(long)]
    input: PathBuf,
    /// Observation window start (defaults to the earliest opened_at)
    #[arg(long)]
    window_start: Option<i64>,
    /// Observation window end (defaults to the latest closed_at)
    #[arg(long)]
    window_end: Option<i64>,
    /// File with one participant label per line to exclude (e.g. bots)
    #[arg(long)]
    deny_list: Option<PathBuf>,
    /// Drop records left with fewer participants than this
    #[arg(long, default_value_t = 1)]
    min_participants: usize,
    /// Human-readable meaning of one tick (metadata only)
    #[arg(long, default_value = "ticks")]
    time_unit: String,
}

#[derive(Args)]
struct HorizonArgs {
    #[command(flatten)]
    input: InputOpts,
    /// Input format; inferred from the file extension when omitted
    #[arg(long, value_enum)]
    format: Option<DataFormat>,
    /// Seed vertex label
    #[arg(long)]
    seed: String,
    /// Seed time (defaults to the window start)
    #[arg(long)]
    seed_time: Option<i64>,
    #[arg(long, value_enum, default_value_t = ModelArg::Respecting)]
    model: ModelArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Point)]
    mode: ModeArg,
    /// Require information strictly before a channel's close to cross it
    #[arg(long, conflicts_with = "non_strict")]
    strict: bool,
    /// Let information arriving exactly at the close still cross
    #[arg(long)]
    non_strict: bool,
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    input: InputOpts,
    #[arg(long, value_enum, default_value_t = ModeArg::Point)]
    mode: ModeArg,
    #[arg(long, conflicts_with = "non_strict")]
    strict: bool,
    #[arg(long)]
    non_strict: bool,
    #[arg(long, value_enum, default_value_t = RuleArg::WindowStart)]
    seed_time_rule: RuleArg,
    /// Sweep worker threads (defaults to available parallelism)
    #[arg(long)]
    workers: Option<usize>,
    /// Report format
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Report file; when set, the summary line still goes to stdout
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ComponentsArgs {
    #[command(flatten)]
    input: InputOpts,
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Error)]
enum AppError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Data(String),
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Usage(_) => 2,
            AppError::Data(_) => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), AppError> {
    match command {
        Command::Generate(args) => cmd_generate(args),
        Command::Horizon(args) => cmd_horizon(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Components(args) => cmd_components(args),
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<(), AppError> {
    let params = SynthParams {
        n_vertices: args.vertices,
        n_channels: args.channels,
        window: TimeWindow::new(TimeStamp(args.window_start), TimeStamp(args.window_end)),
        multi_party_share: args.multi_share,
        tail_mean_size: args.tail_mean,
        mean_duration: args.mean_duration,
        min_size: args.min_size,
        rng_seed: args.rng_seed,
    };
    let records = generate(&params).map_err(|e| AppError::Usage(e.to_string()))?;

    let mut out = open_output(args.out.as_deref())?;
    let io_err = |e: std::io::Error| AppError::Data(e.to_string());
    match args.format {
        DataFormat::Jsonl => write_jsonl(&records, &mut out).map_err(io_err)?,
        DataFormat::Csv => write_csv(&records, &mut out).map_err(io_err)?,
    }
    out.flush().map_err(io_err)
}

fn cmd_horizon(args: HorizonArgs) -> Result<(), AppError> {
    let graph = load_graph(&args.input, args.format)?;
    let view = graph.to_bipartite();

    let seed = graph
        .vertex_by_label(&args.seed)
        .ok_or_else(|| AppError::Usage(format!("unknown seed vertex {:?}", args.seed)))?;

    let output = match args.model {
        ModelArg::Respecting => {
            let policy = TraversalPolicy::new(
                match args.mode {
                    ModeArg::Point => Mode::PointEvent,
                    ModeArg::Interval => Mode::Interval,
                },
                strictness(args.strict, args.non_strict),
            );
            let seed_time = TimeStamp(args.seed_time.unwrap_or(graph.window().start.0));
            let result = temporal_horizon(&view, seed, seed_time, policy)
                .map_err(|e| AppError::Usage(e.to_string()))?;
            let informed: BTreeMap<&str, i64> = result
                .informed
                .iter()
                .map(|(&v, &t)| (graph.vertex_label(v), t.0))
                .collect();
            serde_json::to_string(&informed).expect("map serialization cannot fail")
        }
        ModelArg::Ignoring => {
            let horizon =
                static_horizon(&view, seed).map_err(|e| AppError::Usage(e.to_string()))?;
            let labels: BTreeSet<&str> = horizon.iter().map(|&v| graph.vertex_label(v)).collect();
            serde_json::to_string(&labels).expect("set serialization cannot fail")
        }
    };

    emit(args.out.as_deref(), &output)
}

fn cmd_compare(args: CompareArgs) -> Result<(), AppError> {
    let graph = load_graph(&args.input, None)?;
    let view = graph.to_bipartite();

    let policy = TraversalPolicy::new(
        match args.mode {
            ModeArg::Point => Mode::PointEvent,
            ModeArg::Interval => Mode::Interval,
        },
        strictness(args.strict, args.non_strict),
    );
    let rule = match args.seed_time_rule {
        RuleArg::WindowStart => SeedTimeRule::WindowStart,
        RuleArg::FirstAppearance => SeedTimeRule::FirstAppearance,
    };
    if args.workers == Some(0) {
        return Err(AppError::Usage("--workers must be at least 1".to_string()));
    }

    let report = compare_models(&view, policy, rule, args.workers);
    let rendered = match args.format {
        ReportFormat::Json => render_json(&report, &graph),
        ReportFormat::Csv => render_csv(&report, &graph),
    };

    match args.out.as_deref() {
        Some(path) => {
            std::fs::write(path, rendered).map_err(|e| AppError::Data(e.to_string()))?;
            println!("{}", summary_line(&report));
            Ok(())
        }
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn cmd_components(args: ComponentsArgs) -> Result<(), AppError> {
    let graph = load_graph(&args.input, None)?;
    let view = graph.to_bipartite();

    #[derive(serde::Serialize)]
    struct Bucket {
        size: usize,
        count: usize,
    }
    let histogram: Vec<Bucket> = largest_components(&view)
        .into_iter()
        .map(|(size, count)| Bucket { size, count })
        .collect();
    let output = serde_json::to_string(&histogram).expect("histogram serialization cannot fail");
    emit(args.out.as_deref(), &output)
}

fn strictness(strict: bool, non_strict: bool) -> Strictness {
    debug_assert!(!(strict && non_strict));
    if non_strict {
        Strictness::NonStrict
    } else {
        Strictness::Strict
    }
}

fn infer_format(path: &Path) -> DataFormat {
    match path.extension().and_then(|e| e.to_str()) {
        Some("csv") => DataFormat::Csv,
        _ => DataFormat::Jsonl,
    }
}

fn load_graph(
    opts: &InputOpts,
    format: Option<DataFormat>,
) -> Result<TemporalHypergraph, AppError> {
    let data_err = |e: String| AppError::Data(e);

    let file = File::open(&opts.input)
        .map_err(|e| data_err(format!("cannot open {}: {e}", opts.input.display())))?;
    let records = match format.unwrap_or_else(|| infer_format(&opts.input)) {
        DataFormat::Jsonl => parse_jsonl(BufReader::new(file)),
        DataFormat::Csv => parse_csv(file),
    }
    .map_err(|e| data_err(format!("{}: {e}", opts.input.display())))?;

    let window = resolve_window(&records, opts.window_start, opts.window_end);
    let deny = opts.deny_list.as_deref().map(load_deny_list).transpose()?;
    let filtered = apply_window(&records, window, deny.as_ref(), opts.min_participants);

    TemporalHypergraph::build(&records_to_defs(&filtered), window, &[])
        .map(|g| g.with_time_unit(opts.time_unit.clone()))
        .map_err(|e| data_err(e.to_string()))
}

fn resolve_window(records: &[ChannelRecord], start: Option<i64>, end: Option<i64>) -> TimeWindow {
    let start = start.unwrap_or_else(|| records.iter().map(|r| r.opened_at).min().unwrap_or(0));
    let end = end.unwrap_or_else(|| {
        records
            .iter()
            .map(|r| r.closed_at)
            .max()
            .unwrap_or(start)
            .max(start)
    });
    TimeWindow::new(TimeStamp(start), TimeStamp(end))
}

fn load_deny_list(path: &Path) -> Result<HashSet<String>, AppError> {
    let file = File::open(path)
        .map_err(|e| AppError::Data(format!("cannot open {}: {e}", path.display())))?;
    let mut labels = HashSet::new();
    for line in BufReader::new(file).lines() {
        let line = line.map_err(|e| AppError::Data(e.to_string()))?;
        let label = line.trim();
        if !label.is_empty() && !label.starts_with('#') {
            labels.insert(label.to_string());
        }
    }
    Ok(labels)
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, AppError> {
    match path {
        Some(path) => File::create(path)
            .map(|f| Box::new(f) as Box<dyn Write>)
            .map_err(|e| AppError::Data(format!("cannot create {}: {e}", path.display()))),
        None => Ok(Box::new(std::io::stdout())),
    }
}

fn emit(path: Option<&Path>, output: &str) -> Result<(), AppError> {
    match path {
        Some(path) => std::fs::write(path, format!("{output}\n"))
            .map_err(|e| AppError::Data(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{output}");
            Ok(())
        }
    }
}
