//! Command-line front end: ingestion, profile construction, matching,
//! clustering, scheduling, and report emission. Every command is
//! deterministic — identical inputs produce byte-identical artifacts.

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use priceforge_core::clustering::{
    cluster_scenarios, elbow_k, extract_features, Algorithm, Criterion,
};
use priceforge_core::export;
use priceforge_core::ingest::{parse_price_csv, slice_days, slice_weeks, Manifest, PriceSeries};
use priceforge_core::matching::{best_fit_day, best_fit_week, MatchScope};
use priceforge_core::profile::{
    build_day_scenario, build_week_scenario, profile_stats, ScalingMode, DEFAULT_EXTREME_TAIL,
};
use priceforge_core::scheduling::{
    benchmark, schedule, PlantParams, ScenarioSource, Setup,
};
use priceforge_core::stats;
use priceforge_core::synth;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "priceforge",
    about = "Representative day-ahead / intraday electricity price scenarios",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate and normalize raw price CSVs
    Ingest(IngestArgs),
    /// Construct a representative price profile
    Profile {
        #[command(subcommand)]
        horizon: ProfileCommand,
    },
    /// Summary statistics, histograms, and dominant frequencies
    Stats(StatsArgs),
    /// Find the historical day or week closest to a constructed profile
    Match(MatchArgs),
    /// Cluster days into representative scenarios
    Cluster(ClusterArgs),
    /// Solve the flexible-plant scheduling problem
    Schedule(ScheduleArgs),
    /// Compare scenario generation methods by weighted daily cost
    Benchmark(BenchmarkArgs),
    /// Generate a deterministic synthetic price year
    Synth(SynthArgs),
}

#[derive(Subcommand)]
enum ProfileCommand {
    /// 24 h / 96 quarter profile
    Day(ProfileArgs),
    /// 168 h / 672 quarter profile (whole Monday-Sunday weeks)
    Week(ProfileArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Hourly day-ahead price CSV (timestamp,price_eur_mwh)
    #[arg(long)]
    da: PathBuf,
    /// Quarter-hourly intraday price CSV
    #[arg(long)]
    id: PathBuf,
}

#[derive(Args)]
struct OutArgs {
    /// Output directory
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Primary artifact format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct IngestArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeFlag {
    Unscaled,
    Nominal,
    Extreme,
    Manual,
}

#[derive(Args)]
struct ScalingArgs {
    /// Variance scaling mode
    #[arg(long, value_enum, default_value_t = ModeFlag::Nominal)]
    mode: ModeFlag,
    /// DA scaling factor (manual mode)
    #[arg(long)]
    beta: Option<f64>,
    /// ID deviation scaling factor (manual mode)
    #[arg(long)]
    gamma: Option<f64>,
    /// Upper-tail fraction for extreme mode. Note: weeks with extremely
    /// varying prices rarely follow the nominal pattern, so a smaller
    /// fraction than the daily default can be appropriate for weeks.
    #[arg(long)]
    tail: Option<f64>,
}

#[derive(Args)]
struct ProfileArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    scaling: ScalingArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum HorizonFlag {
    Day,
    Week,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeFlag {
    /// DA and ID jointly
    Joint,
    /// DA prices only
    Da,
    /// ID prices only
    Id,
}

#[derive(Args)]
struct MatchArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    scaling: ScalingArgs,
    /// Match against historical days or weeks
    #[arg(long, value_enum, default_value_t = HorizonFlag::Day)]
    horizon: HorizonFlag,
    /// Which markets enter the fitting objective
    #[arg(long, value_enum, default_value_t = ScopeFlag::Joint)]
    scope: ScopeFlag,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum CriterionFlag {
    A,
    B,
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoFlag {
    Kmeans,
    Kmedoids,
    #[value(name = "hier-m")]
    HierM,
    #[value(name = "hier-c")]
    HierC,
}

impl AlgoFlag {
    fn algorithm(self) -> Algorithm {
        match self {
            AlgoFlag::Kmeans => Algorithm::Kmeans,
            AlgoFlag::Kmedoids => Algorithm::Kmedoids,
            AlgoFlag::HierM => Algorithm::HierarchicalM,
            AlgoFlag::HierC => Algorithm::HierarchicalC,
        }
    }
}

#[derive(Args)]
struct ClusterArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Feature criterion: a = daily mean, b = mean + std, c = mean +
    /// deviation std
    #[arg(long, value_enum, default_value_t = CriterionFlag::B)]
    criterion: CriterionFlag,
    #[arg(long, value_enum, default_value_t = AlgoFlag::Kmeans)]
    algo: AlgoFlag,
    /// Cluster count, or "auto" for elbow selection
    #[arg(long, default_value = "auto")]
    k: String,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum SetupFlag {
    I,
    Ii,
    Iii,
}

impl SetupFlag {
    fn setup(self) -> Setup {
        match self {
            SetupFlag::I => Setup::I,
            SetupFlag::Ii => Setup::II,
            SetupFlag::Iii => Setup::III,
        }
    }
}

#[derive(Args)]
struct ScheduleArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = SetupFlag::I)]
    setup: SetupFlag,
    /// Plant parameter JSON (defaults apply when absent)
    #[arg(long)]
    plant: Option<PathBuf>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct BenchmarkArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = SetupFlag::I)]
    setup: SetupFlag,
    #[arg(long)]
    plant: Option<PathBuf>,
    /// Comma-separated scenario list, e.g. "nominal,kmedoids:b:4".
    /// Profile scenarios: unscaled | nominal | extreme[:TAIL].
    /// Cluster scenarios: ALGO:CRITERION[:K] with K defaulting to auto.
    #[arg(long, default_value = "unscaled,nominal")]
    scenarios: String,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Args)]
struct SynthArgs {
    /// Year to synthesize
    #[arg(long, default_value_t = 2023)]
    year: i32,
    /// DA noise amplitude, EUR/MWh
    #[arg(long, default_value_t = 8.0)]
    noise: f64,
    /// Quarter-hourly ID deviation amplitude, EUR/MWh
    #[arg(long, default_value_t = 12.0)]
    id_noise: f64,
    /// Systematic intra-hour ID pattern amplitude, EUR/MWh
    #[arg(long, default_value_t = 6.0)]
    id_pattern: f64,
    /// Relative weekly modulation depth
    #[arg(long, default_value_t = 0.08)]
    weekly: f64,
    #[command(flatten)]
    out: OutArgs,
}

/// Usage errors exit 1, data/solve errors exit 2.
enum CliError {
    Usage(String),
    Run(anyhow::Error),
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Run(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are successes, not usage errors
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Run(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Ingest(args) => cmd_ingest(args),
        Command::Profile { horizon } => match horizon {
            ProfileCommand::Day(args) => cmd_profile(args, HorizonFlag::Day),
            ProfileCommand::Week(args) => cmd_profile(args, HorizonFlag::Week),
        },
        Command::Stats(args) => cmd_stats(args).map_err(Into::into),
        Command::Match(args) => cmd_match(args),
        Command::Cluster(args) => cmd_cluster(args),
        Command::Schedule(args) => cmd_schedule(args).map_err(Into::into),
        Command::Benchmark(args) => cmd_benchmark(args),
        Command::Synth(args) => cmd_synth(args).map_err(Into::into),
    }
}

/// Raw bytes plus the parsed series; the bytes feed the provenance hash.
struct LoadedSeries {
    series: PriceSeries,
    fingerprint: String,
    report: priceforge_core::ingest::CalendarReport,
    timezone: String,
}

fn read_manifest(csv_path: &Path) -> Option<Manifest> {
    let stem = csv_path.file_stem()?.to_str()?;
    let path = csv_path.with_file_name(format!("{stem}.manifest.json"));
    let text = fs::read_to_string(path).ok()?;
    serde_json::from_str(&text).ok()
}

fn load_series(input: &InputArgs) -> Result<LoadedSeries> {
    let da_bytes = fs::read(&input.da)
        .with_context(|| format!("reading {}", input.da.display()))?;
    let id_bytes = fs::read(&input.id)
        .with_context(|| format!("reading {}", input.id.display()))?;
    let outcome = parse_price_csv(da_bytes.as_slice(), id_bytes.as_slice())
        .context("parsing price CSVs")?;
    let manifest_tz = read_manifest(&input.da)
        .or_else(|| read_manifest(&input.id))
        .map(|m| m.timezone);
    let timezone = std::env::var("PRICEFORGE_TZ")
        .ok()
        .or(manifest_tz)
        .unwrap_or_else(|| "local".into());
    Ok(LoadedSeries {
        series: outcome.series,
        fingerprint: export::fingerprint(&[&da_bytes, &id_bytes]),
        report: outcome.report,
        timezone,
    })
}

fn resolve_mode(args: &ScalingArgs) -> Result<ScalingMode, CliError> {
    Ok(match args.mode {
        ModeFlag::Unscaled => ScalingMode::Unscaled,
        ModeFlag::Nominal => ScalingMode::Nominal,
        ModeFlag::Extreme => {
            let tail = args.tail.unwrap_or(DEFAULT_EXTREME_TAIL);
            println!("extreme mode: tail fraction {tail}");
            ScalingMode::Extreme { tail }
        }
        ModeFlag::Manual => {
            let (Some(beta), Some(gamma)) = (args.beta, args.gamma) else {
                return Err(CliError::Usage(
                    "manual mode requires both --beta and --gamma".into(),
                ));
            };
            ScalingMode::Manual { beta, gamma }
        }
    })
}

fn write_artifact(dir: &Path, name: &str, content: &str) -> Result<()> {
    fs::create_dir_all(dir)
        .with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(name);
    fs::write(&path, content).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn cmd_ingest(args: IngestArgs) -> Result<(), CliError> {
    let loaded = load_series(&args.input)?;
    let mut da = Vec::new();
    let mut id = Vec::new();
    priceforge_core::ingest::write_price_csv(&loaded.series, &mut da, &mut id)
        .context("serializing cleaned series")?;
    let dir = &args.out.out;
    write_artifact(dir, "da_clean.csv", &String::from_utf8(da).expect("utf8"))?;
    write_artifact(dir, "id_clean.csv", &String::from_utf8(id).expect("utf8"))?;
    let report = serde_json::json!({
        "start_date": loaded.series.start_date.to_string(),
        "n_days": loaded.series.n_days,
        "timezone": loaded.timezone,
        "dst_filled": loaded.report.dst_filled,
        "duplicates_averaged": loaded.report.duplicates_averaged,
        "notes": loaded.report.notes,
        "source_fingerprint": loaded.fingerprint,
    });
    write_artifact(
        dir,
        "ingest_report.json",
        &serde_json::to_string_pretty(&report).expect("report serializes"),
    )?;
    println!(
        "ingested {} days starting {}",
        loaded.series.n_days, loaded.series.start_date
    );
    Ok(())
}

fn cmd_profile(args: ProfileArgs, horizon: HorizonFlag) -> Result<(), CliError> {
    let mode = resolve_mode(&args.scaling)?;
    let loaded = load_series(&args.input)?;
    let dir = &args.out.out;
    match horizon {
        HorizonFlag::Day => {
            let days = slice_days(&loaded.series);
            let profile = build_day_scenario(&days, mode).context("building day profile")?;
            write_artifact(dir, "profile_day_da.csv", &export::day_da_csv(&profile))?;
            write_artifact(dir, "profile_day_id.csv", &export::day_id_csv(&profile))?;
            write_artifact(
                dir,
                "profile_day.json",
                &export::day_profile_json(&profile, &loaded.fingerprint),
            )?;
            println!(
                "day profile ({}): beta = {:.6}, gamma = {:.6}",
                profile.scaling.mode.label(),
                profile.scaling.beta,
                profile.scaling.gamma
            );
        }
        HorizonFlag::Week => {
            let weeks = slice_weeks(&loaded.series).context("slicing weeks")?;
            let profile = build_week_scenario(&weeks, mode).context("building week profile")?;
            write_artifact(dir, "profile_week_da.csv", &export::week_da_csv(&profile))?;
            write_artifact(dir, "profile_week_id.csv", &export::week_id_csv(&profile))?;
            write_artifact(
                dir,
                "profile_week.json",
                &export::week_profile_json(&profile, &loaded.fingerprint),
            )?;
            println!(
                "week profile ({}): beta = {:.6}, gamma = {:.6}",
                profile.scaling.mode.label(),
                profile.scaling.beta,
                profile.scaling.gamma
            );
        }
    }
    Ok(())
}

fn cmd_stats(args: StatsArgs) -> Result<()> {
    let loaded = load_series(&args.input)?;
    let series = &loaded.series;
    let (da_summary, id_summary) = profile_stats(&series.da, &series.id);
    let da_hist = stats::scott_histogram(&series.da).context("DA histogram")?;
    let id_hist = stats::scott_histogram(&series.id).context("ID histogram")?;
    let da_peaks = stats::dominant_frequencies(&series.da, 1.0, 3).context("DA periodogram")?;
    let id_peaks = stats::dominant_frequencies(&series.id, 0.25, 3).context("ID periodogram")?;
    let bundle = serde_json::json!({
        "da": da_summary,
        "id": id_summary,
        "da_dominant_frequencies_per_hour": da_peaks,
        "id_dominant_frequencies_per_hour": id_peaks,
        "source_fingerprint": loaded.fingerprint,
    });
    let dir = &args.out.out;
    write_artifact(dir, "stats.json", &serde_json::to_string_pretty(&bundle)?)?;
    if args.out.format == Format::Csv {
        write_artifact(dir, "histogram_da.csv", &export::histogram_csv(&da_hist))?;
        write_artifact(dir, "histogram_id.csv", &export::histogram_csv(&id_hist))?;
    }
    println!(
        "DA mean {:.2}, std {:.2}; ID mean {:.2}, std {:.2}",
        da_summary.mean, da_summary.std, id_summary.mean, id_summary.std
    );
    Ok(())
}

fn cmd_match(args: MatchArgs) -> Result<(), CliError> {
    let mode = resolve_mode(&args.scaling)?;
    let scope = match args.scope {
        ScopeFlag::Joint => MatchScope::Joint,
        ScopeFlag::Da => MatchScope::DaOnly,
        ScopeFlag::Id => MatchScope::IdOnly,
    };
    let loaded = load_series(&args.input)?;
    let dir = &args.out.out;
    let (result, date) = match args.horizon {
        HorizonFlag::Day => {
            let days = slice_days(&loaded.series);
            let profile = build_day_scenario(&days, mode).context("building day profile")?;
            let result = best_fit_day(&days, &profile, scope).context("matching days")?;
            let date = days[result.index - 1].date.to_string();
            (result, date)
        }
        HorizonFlag::Week => {
            let weeks = slice_weeks(&loaded.series).context("slicing weeks")?;
            let profile = build_week_scenario(&weeks, mode).context("building week profile")?;
            let result = best_fit_week(&weeks, &profile, scope).context("matching weeks")?;
            let date = weeks
                .iter()
                .find(|w| w.week_index == result.index)
                .map(|w| w.days[0].date.to_string())
                .unwrap_or_default();
            (result, date)
        }
    };
    write_artifact(dir, "match.csv", &export::match_csv(&result, &date))?;
    println!(
        "best fit: index {} ({date}), total MAD {:.4}",
        result.index, result.total_mad
    );
    Ok(())
}

fn parse_k(k: &str) -> Result<Option<usize>, CliError> {
    if k == "auto" {
        return Ok(None);
    }
    k.parse::<usize>()
        .map(Some)
        .map_err(|_| CliError::Usage(format!("--k must be an integer or \"auto\", got {k:?}")))
}

fn cmd_cluster(args: ClusterArgs) -> Result<(), CliError> {
    let criterion = match args.criterion {
        CriterionFlag::A => Criterion::A,
        CriterionFlag::B => Criterion::B,
        CriterionFlag::C => Criterion::C,
    };
    let algorithm = args.algo.algorithm();
    let requested_k = parse_k(&args.k)?;
    let loaded = load_series(&args.input)?;
    let days = slice_days(&loaded.series);
    let features = extract_features(&days, criterion).context("extracting features")?;
    let k = match requested_k {
        Some(k) => k,
        None => {
            let (k, _curve) = elbow_k(&features, algorithm, 10).context("elbow selection")?;
            println!("elbow method selected k = {k}");
            k
        }
    };
    let cs = algorithm.run(&features, k).context("clustering")?;
    let dir = &args.out.out;
    write_artifact(dir, "clusters.csv", &export::cluster_assignment_csv(&cs, &days))?;
    write_artifact(dir, "weights.csv", &export::cluster_weights_csv(&cs))?;
    for (i, (profile, weight)) in cluster_scenarios(&cs, &days).iter().enumerate() {
        write_artifact(dir, &format!("cluster_{i}_da.csv"), &export::day_da_csv(profile))?;
        write_artifact(dir, &format!("cluster_{i}_id.csv"), &export::day_id_csv(profile))?;
        let mut bundle: serde_json::Value =
            serde_json::from_str(&export::day_profile_json(profile, &loaded.fingerprint))
                .expect("bundle parses");
        bundle["weight"] = serde_json::json!(weight);
        write_artifact(
            dir,
            &format!("cluster_{i}.json"),
            &serde_json::to_string_pretty(&bundle).expect("bundle serializes"),
        )?;
    }
    println!("clustered {} days into k = {k}", days.len());
    Ok(())
}

fn load_plant(path: &Option<PathBuf>) -> Result<PlantParams> {
    match path {
        None => Ok(PlantParams::default()),
        Some(p) => {
            let text =
                fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            serde_json::from_str(&text).with_context(|| format!("parsing {}", p.display()))
        }
    }
}

fn cmd_schedule(args: ScheduleArgs) -> Result<()> {
    let setup = args.setup.setup();
    let params = load_plant(&args.plant)?;
    let loaded = load_series(&args.input)?;
    let result = schedule(
        &loaded.series.da,
        Some(&loaded.series.id),
        &params,
        setup,
    )
    .context("solving schedule")?;
    let dir = &args.out.out;
    write_artifact(dir, "schedule.csv", &export::schedule_csv(&result))?;
    let bundle = serde_json::json!({
        "setup": setup.label(),
        "objective_eur": result.objective,
        "daily_cost_eur": result.daily_cost,
        "plant": params,
        "source_fingerprint": loaded.fingerprint,
    });
    write_artifact(dir, "schedule.json", &serde_json::to_string_pretty(&bundle)?)?;
    println!(
        "setup {}: total cost {:.2} EUR over {} days",
        setup.label(),
        result.objective,
        result.daily_cost.len()
    );
    Ok(())
}

fn parse_scenarios(
    spec: &str,
    days: &[priceforge_core::DayRecord],
) -> Result<Vec<(String, ScenarioSource)>, CliError> {
    let mut out = Vec::new();
    for token in spec.split(',').filter(|t| !t.is_empty()) {
        let parts: Vec<&str> = token.split(':').collect();
        let source = match parts[0] {
            "unscaled" | "nominal" | "extreme" => {
                let mode = match parts[0] {
                    "unscaled" => ScalingMode::Unscaled,
                    "nominal" => ScalingMode::Nominal,
                    _ => {
                        let tail = match parts.get(1) {
                            None => DEFAULT_EXTREME_TAIL,
                            Some(t) => t.parse().map_err(|_| {
                                CliError::Usage(format!("bad tail fraction in {token:?}"))
                            })?,
                        };
                        ScalingMode::Extreme { tail }
                    }
                };
                let profile =
                    build_day_scenario(days, mode).context("building scenario profile")?;
                ScenarioSource::Day(profile)
            }
            algo_name => {
                let algorithm = match algo_name {
                    "kmeans" => Algorithm::Kmeans,
                    "kmedoids" => Algorithm::Kmedoids,
                    "hier-m" => Algorithm::HierarchicalM,
                    "hier-c" => Algorithm::HierarchicalC,
                    other => {
                        return Err(CliError::Usage(format!(
                            "unknown scenario {other:?} in --scenarios"
                        )))
                    }
                };
                let criterion = match parts.get(1) {
                    Some(&"a") => Criterion::A,
                    Some(&"b") => Criterion::B,
                    Some(&"c") => Criterion::C,
                    _ => {
                        return Err(CliError::Usage(format!(
                            "cluster scenario {token:?} needs a criterion (a|b|c)"
                        )))
                    }
                };
                let features =
                    extract_features(days, criterion).context("extracting features")?;
                let k = match parts.get(2) {
                    None => elbow_k(&features, algorithm, 10).context("elbow selection")?.0,
                    Some(t) => t.parse().map_err(|_| {
                        CliError::Usage(format!("bad cluster count in {token:?}"))
                    })?,
                };
                let cs = algorithm.run(&features, k).context("clustering")?;
                ScenarioSource::Weighted(cluster_scenarios(&cs, days))
            }
        };
        out.push((token.to_string(), source));
    }
    Ok(out)
}

fn cmd_benchmark(args: BenchmarkArgs) -> Result<(), CliError> {
    let setup = args.setup.setup();
    let params = load_plant(&args.plant).map_err(CliError::Run)?;
    let loaded = load_series(&args.input)?;
    let days = slice_days(&loaded.series);
    let scenarios = parse_scenarios(&args.scenarios, &days)?;
    let report = benchmark(&loaded.series, &scenarios, &params, setup)
        .context("running benchmark")?;
    write_artifact(&args.out.out, "benchmark.csv", &export::benchmark_csv(&report))?;
    for row in &report.rows {
        println!(
            "{:<24} k={:<3} WDC {:>12.2} EUR  dev {:+.2} %",
            row.scenario, row.k, row.wdc_eur, row.dev_percent
        );
    }
    Ok(())
}

fn cmd_synth(args: SynthArgs) -> Result<()> {
    let spec = synth::SynthSpec {
        year: args.year,
        base_day: synth::double_peak_base_day(),
        weekly_amplitude: args.weekly,
        noise_amplitude: args.noise,
        id_noise_amplitude: args.id_noise,
        id_pattern_amplitude: args.id_pattern,
    };
    let series = synth::generate(&spec).map_err(|e| anyhow::anyhow!(e))?;
    let mut da = Vec::new();
    let mut id = Vec::new();
    priceforge_core::ingest::write_price_csv(&series, &mut da, &mut id)
        .context("serializing synthetic series")?;
    let dir = &args.out.out;
    write_artifact(dir, "synth_da.csv", &String::from_utf8(da).expect("utf8"))?;
    write_artifact(dir, "synth_id.csv", &String::from_utf8(id).expect("utf8"))?;
    println!("wrote {} synthetic days for {}", series.n_days, args.year);
    Ok(())
}
