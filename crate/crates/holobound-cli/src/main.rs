use std::io::Write;
use std::path::PathBuf;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand};

use holobound_cli::config::RunConfig;
use holobound_cli::report_io::{self, ReportMeta};
use holobound_cli::runner::{self, RunError};
use holobound_cli::presets;

/// Exit status used for configuration problems.
const EXIT_CONFIG: i32 = 64;

#[derive(Parser)]
#[command(
    name = "holobound",
    about = "Verify sharp pointwise bounds on weighted holomorphic function spaces",
    after_help = "Thread count: set RAYON_NUM_THREADS (results are identical for any value)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the checks of a configuration file and write a report.
    Verify {
        /// Path to the JSON run configuration.
        #[arg(long)]
        config: PathBuf,
        /// Override the configuration seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Report output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Report format.
        #[arg(long, value_parser = ["csv", "json"])]
        format: Option<String>,
    },
    /// Inspect the built-in presets.
    Presets {
        #[command(subcommand)]
        action: PresetsAction,
    },
}

#[derive(Subcommand)]
enum PresetsAction {
    /// List the preset names.
    List,
    /// Print one preset as a runnable JSON configuration.
    Show { name: String },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Verify {
            config,
            seed,
            out,
            format,
        } => verify(config, seed, out, format),
        Command::Presets { action } => match action {
            PresetsAction::List => {
                for name in presets::PRESET_NAMES {
                    println!("{name}");
                }
                0
            }
            PresetsAction::Show { name } => match presets::preset(&name) {
                Some(cfg) => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&cfg).expect("preset serializes")
                    );
                    0
                }
                None => {
                    eprintln!(
                        "unknown preset '{name}'; available: {}",
                        presets::PRESET_NAMES.join(", ")
                    );
                    EXIT_CONFIG
                }
            },
        },
    };
    std::process::exit(code);
}

fn verify(
    config_path: PathBuf,
    seed: Option<u64>,
    out: Option<PathBuf>,
    format: Option<String>,
) -> i32 {
    let raw = match std::fs::read_to_string(&config_path) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("cannot read {}: {e}", config_path.display());
            return EXIT_CONFIG;
        }
    };
    let mut config: RunConfig = match serde_json::from_str(&raw) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("invalid configuration: {e}");
            return EXIT_CONFIG;
        }
    };
    if let Some(s) = seed {
        config.seed = s;
    }
    let format = format
        .or_else(|| {
            config
                .output
                .as_ref()
                .and_then(|o| o.format.clone())
        })
        .unwrap_or_else(|| "json".to_string());
    let out = out.or_else(|| {
        config
            .output
            .as_ref()
            .and_then(|o| o.path.clone())
            .map(PathBuf::from)
    });

    let started = Instant::now();
    let (summary, reports) = match runner::run(&config) {
        Ok(x) => x,
        Err(RunError::Config(errors)) => {
            eprintln!("configuration errors:");
            for e in errors {
                eprintln!("  {e}");
            }
            return EXIT_CONFIG;
        }
        Err(RunError::Execution(msg)) => {
            eprintln!("execution error: {msg}");
            return EXIT_CONFIG;
        }
    };
    let meta = ReportMeta {
        generated_at_unix: SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0),
        wall_ms: started.elapsed().as_millis(),
    };

    let mut buffer: Vec<u8> = Vec::new();
    let written = match format.as_str() {
        "json" => report_io::write_json(&mut buffer, &summary, &reports, meta.clone()),
        "csv" => report_io::write_csv(&mut buffer, &reports),
        other => {
            eprintln!("unknown format '{other}'");
            return EXIT_CONFIG;
        }
    };
    if let Err(e) = written {
        eprintln!("cannot encode report: {e}");
        return EXIT_CONFIG;
    }
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &buffer) {
                eprintln!("cannot write {}: {e}", path.display());
                return EXIT_CONFIG;
            }
        }
        None => {
            std::io::stdout().write_all(&buffer).expect("stdout");
        }
    }
    for sp in &summary.spaces {
        match sp.normalization {
            Some(n) => eprintln!(
                "space {}: {} n={} p={} alpha={} N={:.12e}",
                sp.id, sp.geometry, sp.n, sp.p, sp.alpha, n
            ),
            None => eprintln!(
                "space {}: {} n={} p={} alpha={} (sup-norm only)",
                sp.id, sp.geometry, sp.n, sp.p, sp.alpha
            ),
        }
    }
    eprintln!(
        "checks: {} pass, {} fail, {} inconclusive (seed {}, {} ms)",
        summary.pass,
        summary.fail,
        summary.inconclusive,
        summary.seed,
        meta.wall_ms
    );
    runner::exit_code(&summary)
}
