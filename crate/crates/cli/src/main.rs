//! `geobleu` command-line front end.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use geobleu::scoring::read_reports_csv;
use geobleu::toy::write_sweep_csv;
use geobleu::{
    parse_pairs, rank_extremes, run_sweep, score_pairs, write_reports_csv, BleuParams,
    CircleConfig, GeoBleuParams, Metric, MetricSet, RankMetric, ScoreOptions, Workers,
};

#[derive(Parser)]
#[command(
    name = "geobleu",
    version,
    about = "Similarity scores for geospatial sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score candidate/reference pairs from a JSON Lines file.
    Score(ScoreArgs),
    /// Compare a circular sequence with each of its phase shifts.
    ToySweep(SweepArgs),
    /// Print the most and least similar pair ids from a score CSV.
    Rank(RankArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    Geobleu,
    Bleu,
    Dtw,
    All,
}

#[derive(Args)]
struct GeoBleuArgs {
    /// Distance-decay coefficient of the n-gram similarity.
    #[arg(long, default_value_t = GeoBleuParams::DEFAULT_BETA)]
    beta: f64,

    /// Maximum n-gram order for GEO-BLEU.
    #[arg(long, default_value_t = GeoBleuParams::DEFAULT_MAX_N)]
    max_n: usize,

    /// Comma-separated GEO-BLEU weights for orders 1..=max-n (default uniform).
    #[arg(long, value_delimiter = ',')]
    weights: Option<Vec<f64>>,
}

impl GeoBleuArgs {
    fn params(&self) -> Result<GeoBleuParams> {
        Ok(GeoBleuParams::new(
            self.beta,
            self.max_n,
            self.weights.clone(),
        )?)
    }
}

#[derive(Args)]
struct ScoreArgs {
    /// Pair file; reads stdin when omitted or `-`.
    input: Option<PathBuf>,

    /// Metrics to compute (comma-separated).
    #[arg(long, value_enum, value_delimiter = ',', default_value = "all")]
    metric: Vec<MetricArg>,

    #[command(flatten)]
    geobleu: GeoBleuArgs,

    /// Maximum n-gram order for BLEU (uniform weights).
    #[arg(long, default_value_t = BleuParams::DEFAULT_MAX_N)]
    bleu_max_n: usize,

    /// Worker threads (default: all available cores).
    #[arg(long)]
    jobs: Option<usize>,

    /// Output CSV path (default stdout).
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 36)]
    cells: usize,

    #[arg(long, default_value_t = 10.0)]
    radius_km: f64,

    #[arg(long, default_value_t = 0.5)]
    cell_size_km: f64,

    #[command(flatten)]
    geobleu: GeoBleuArgs,

    #[arg(long)]
    jobs: Option<usize>,

    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RankArgs {
    /// Score CSV produced by `geobleu score`; reads stdin when omitted or `-`.
    input: Option<PathBuf>,

    /// Column to rank by: geobleu, bleu, dtw or dtw_normalized.
    #[arg(long, default_value = "geobleu")]
    by: String,

    /// Number of ids at each end.
    #[arg(short, long, default_value_t = 20)]
    k: usize,

    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn workers(jobs: Option<usize>) -> Result<Workers> {
    match jobs {
        None => Ok(Workers::Auto),
        Some(0) => bail!("--jobs must be at least 1"),
        Some(n) => Ok(Workers::Fixed(n)),
    }
}

fn open_input(path: Option<&PathBuf>) -> Result<Box<dyn io::BufRead>> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let f = File::open(p).with_context(|| format!("opening {}", p.display()))?;
            Ok(Box::new(BufReader::new(f)))
        }
        _ => Ok(Box::new(io::stdin().lock())),
    }
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    match path {
        Some(p) => {
            let f = File::create(p).with_context(|| format!("creating {}", p.display()))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

fn metric_set(args: &[MetricArg]) -> MetricSet {
    if args.contains(&MetricArg::All) {
        return MetricSet::ALL;
    }
    args.iter()
        .map(|m| match m {
            MetricArg::Geobleu => Metric::GeoBleu,
            MetricArg::Bleu => Metric::Bleu,
            MetricArg::Dtw | MetricArg::All => Metric::Dtw,
        })
        .collect()
}

fn score(args: ScoreArgs) -> Result<()> {
    let opts = ScoreOptions {
        geobleu: args.geobleu.params()?,
        bleu: BleuParams::new(args.bleu_max_n, None)?,
        metrics: metric_set(&args.metric),
    };
    let workers = workers(args.jobs)?;
    let records = parse_pairs(open_input(args.input.as_ref())?)?;
    let reports = score_pairs(&records, &opts, workers)?;
    write_reports_csv(open_output(args.output.as_ref())?, &reports)?;
    Ok(())
}

fn toy_sweep(args: SweepArgs) -> Result<()> {
    let config = CircleConfig::new(args.cells, args.radius_km, args.cell_size_km)?;
    let params = args.geobleu.params()?;
    let rows = run_sweep(&config, &params, workers(args.jobs)?);
    write_sweep_csv(open_output(args.output.as_ref())?, &config, &params, &rows)?;
    Ok(())
}

fn rank(args: RankArgs) -> Result<()> {
    let metric: RankMetric = args.by.parse()?;
    let reports = read_reports_csv(open_input(args.input.as_ref())?)?;
    let (top, bottom) = rank_extremes(&reports, metric, args.k)?;
    let mut out = open_output(args.output.as_ref())?;
    writeln!(out, "group,rank,id")?;
    for (group, ids) in [("top", top), ("bottom", bottom)] {
        for (i, id) in ids.iter().enumerate() {
            writeln!(out, "{group},{},{}", i + 1, csv_field(id))?;
        }
    }
    out.flush()?;
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Score(a) => score(a),
        Command::ToySweep(a) => toy_sweep(a),
        Command::Rank(a) => rank(a),
    }
}
