use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use quas::backends::BackendConfig;
use quas::baselines::HeuristicConfig;
use quas::harness::{
    export_plot_data, parse_sizes, report_path, run_campaign, score_file, CampaignConfig, ResultFile, ScoreOverrides,
    OUTPUT_DIR_ENV,
};
use quas::problems::ProblemKind;
use quas::scoring::{QuasReport, Weights, DEFAULT_MIN_ACCURACY};
use quas::QuasError;

#[derive(Parser)]
#[command(name = "quas", version, about = "Application-level solver benchmarking and scoring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a campaign and append data points to a result file
    Run(RunArgs),
    /// Score a result file and write the report next to it
    Score(ScoreArgs),
    /// Export per-size CSVs of normalized points and fitted curves
    PlotData(PlotArgs),
}

#[derive(Args)]
struct RunArgs {
    /// max-cut, ising or tsp
    #[arg(long)]
    problem: String,
    /// random, sa or qaoa-sim
    #[arg(long)]
    backend: String,
    /// Inclusive range (`4..12`) or list (`4,6,8`)
    #[arg(long)]
    sizes: String,
    #[arg(long, default_value_t = 25)]
    instances: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Result file; defaults to `$QUAS_OUTPUT_DIR/<problem>-<backend>-seed<seed>.jsonl`
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = OUTPUT_DIR_ENV, default_value = ".")]
    out_dir: PathBuf,
    /// Samples (random), reads (sa) or shots (qaoa-sim)
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    sweeps: Option<usize>,
    #[arg(long)]
    t_start: Option<f64>,
    #[arg(long)]
    t_end: Option<f64>,
    #[arg(long)]
    layers: Option<usize>,
    #[arg(long)]
    max_evals: Option<usize>,
    #[arg(long)]
    max_qubits: Option<usize>,
    #[arg(long, default_value_t = HeuristicConfig::default().iterations_per_var)]
    heuristic_iters_per_var: usize,
    #[arg(long, default_value_t = HeuristicConfig::default().restarts)]
    heuristic_restarts: usize,
}

#[derive(Args)]
struct ScoreArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    min_accuracy: Option<f64>,
    #[arg(long)]
    w_acc: Option<f64>,
    #[arg(long)]
    w_speed: Option<f64>,
}

#[derive(Args)]
struct PlotArgs {
    #[arg(long)]
    report: PathBuf,
    #[arg(long)]
    points: PathBuf,
    #[arg(long)]
    out_dir: PathBuf,
}

fn backend_config(args: &RunArgs) -> Result<BackendConfig, QuasError> {
    let mut cfg = BackendConfig::from_id(&args.backend)?;
    match &mut cfg {
        BackendConfig::Random { samples } => {
            if let Some(s) = args.samples {
                *samples = s;
            }
        }
        BackendConfig::Sa { reads, sweeps, t_start, t_end } => {
            if let Some(s) = args.samples {
                *reads = s;
            }
            *sweeps = args.sweeps;
            *t_start = args.t_start;
            *t_end = args.t_end;
        }
        BackendConfig::QaoaSim { layers, shots, max_evals, max_qubits } => {
            if let Some(s) = args.samples {
                *shots = s;
            }
            if let Some(l) = args.layers {
                *layers = l;
            }
            if let Some(m) = args.max_evals {
                *max_evals = m;
            }
            if let Some(q) = args.max_qubits {
                *max_qubits = q;
            }
        }
    }
    Ok(cfg)
}

fn run(args: RunArgs) -> Result<(), QuasError> {
    let problem: ProblemKind = args.problem.parse()?;
    let backend = backend_config(&args)?;
    let output = args
        .out
        .clone()
        .unwrap_or_else(|| args.out_dir.join(format!("{}-{}-seed{}.jsonl", problem, backend.id(), args.seed)));
    if let Some(parent) = output.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent)?;
    }
    let mut config = CampaignConfig::new(problem, backend, parse_sizes(&args.sizes)?, output);
    config.instances_per_size = args.instances;
    config.campaign_seed = args.seed;
    config.heuristic = HeuristicConfig { iterations_per_var: args.heuristic_iters_per_var, restarts: args.heuristic_restarts };
    let file = run_campaign(&config)?;
    println!(
        "{}: {} data points, {} skipped",
        config.output.display(),
        file.points().count(),
        file.skipped().count()
    );
    Ok(())
}

fn print_report(report: &QuasReport) {
    println!("{:>6} {:>8} {:>6} {:>8} {:>8} {:>8} {:>10} {:>10} {:>10}", "size", "retained", "front", "a", "b", "p", "A_curve", "A_offset", "A_n");
    for s in &report.sizes {
        let (a, b, p) = s.fit.map_or((f64::NAN, f64::NAN, f64::NAN), |f| (f.a, f.b, f.p));
        println!(
            "{:>6} {:>8} {:>6} {:>8.4} {:>8.4} {:>8.4} {:>10.6} {:>10.6} {:>10.6}",
            s.size, s.retained, s.front_points, a, b, p, s.area_curve, s.area_offset, s.area
        );
    }
    println!("score {:.6}", report.total);
}

fn score(args: ScoreArgs) -> Result<(), QuasError> {
    let weights = match (args.w_acc, args.w_speed) {
        (None, None) => None,
        (acc, speed) => Some(Weights {
            accuracy: acc.unwrap_or(Weights::default().accuracy),
            speed: speed.unwrap_or(Weights::default().speed),
        }),
    };
    if let Some(m) = args.min_accuracy {
        if !(0.0..).contains(&m) {
            return Err(QuasError::Config(format!("minimum accuracy must be nonnegative, got {m}")));
        }
    }
    let overrides = ScoreOverrides { min_accuracy: args.min_accuracy, weights };
    let report = score_file(&args.input, overrides)?;
    print_report(&report);
    println!(
        "report written to {} (min accuracy {})",
        report_path(&args.input).display(),
        args.min_accuracy.unwrap_or(DEFAULT_MIN_ACCURACY)
    );
    Ok(())
}

fn plot_data(args: PlotArgs) -> Result<(), QuasError> {
    let text = std::fs::read_to_string(&args.report)?;
    let report: QuasReport = serde_json::from_str(&text).map_err(|e| QuasError::Data(format!("bad report: {e}")))?;
    let points = ResultFile::read(&args.points)?;
    let bundle = export_plot_data(&report, &points, &args.out_dir)?;
    println!("wrote {} files to {}", bundle.files.len(), args.out_dir.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Run(a) => run(a),
        Command::Score(a) => score(a),
        Command::PlotData(a) => plot_data(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
