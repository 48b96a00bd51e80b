use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use artin::oracle::cache::CACHE_DIR_ENV;
use artin_cli::{run, CliError, Command, Presets, Report, RunConfig};
use clap::Parser;

/// Normal forms, geodesics, divisor sweeps and rapid-decay checks for Artin groups of large type.
#[derive(Debug, Parser)]
#[command(name = "artin-rd", version)]
struct Cli {
    /// Preset name or path to a presentation TOML file.
    #[arg(short, long, global = true, default_value = "tri-345")]
    presentation: String,
    /// Letter order for shortlex comparisons, listing every letter once (e.g. `aAbBcC`).
    #[arg(long, global = true)]
    order: Option<String>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized trials.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Run hypothesis-guarded operations on presentations failing the (3,3,m) condition.
    #[arg(long, global = true)]
    allow_counterexample: bool,
    /// Directory for CSV artifacts.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads; 0 picks one per core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Upper bound on the number of elements in an enumerated ball.
    #[arg(long, global = true, default_value_t = 5_000_000)]
    max_elements: usize,
    /// Directory caching enumerated balls.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let cfg = RunConfig {
        presentation: Presets::resolve(&cli.presentation)?,
        order: cli.order.clone(),
        seed: cli.seed,
        allow_counterexample: cli.allow_counterexample,
        max_elements: cli.max_elements,
        cache_dir: cli.cache_dir.clone(),
    };
    let report = run(&cli.command, &cfg)?;
    if let Some(dir) = &cli.out {
        let io = |e: std::io::Error| CliError::Io { path: dir.display().to_string(), message: e.to_string() };
        std::fs::create_dir_all(dir).map_err(io)?;
        for a in &report.artifacts {
            std::fs::write(dir.join(&a.file_name), &a.contents).map_err(io)?;
        }
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let err = CliError::Usage(e.to_string());
            eprintln!("{}", err.to_json());
            return ExitCode::from(2);
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not an error worth reporting.
            let _ = if cli.json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&report.json).expect("report JSON serializes"))
            } else {
                write!(stdout, "{}", report.text)
            };
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::from(2)
        }
    }
}
