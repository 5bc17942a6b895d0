//! The `molec` binary: argument parsing and process plumbing around
//! [`molec_cli::run`].

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use molec_cli::config::{parse_ambient, AmbientConfig};
use molec_cli::experiments::ExperimentArgs;
use molec_cli::{run, Command, RunConfig, EXIT_CONFIG};

#[derive(Parser)]
#[command(
    name = "molec",
    about = "Factor ideals of finite ring models into molecules",
    long_about = "Builds a certified finite model of a ring, then enumerates, censuses, or \
                  factors the ideal it was built around.  Ambients come from a TOML document \
                  (--ambient); without one the ℤ/144 integer model with target (12) is used."
)]
struct Cli {
    /// TOML ambient document (see README for the schema).
    #[arg(long, global = true, value_name = "FILE")]
    ambient: Option<PathBuf>,
    /// Emit the versioned JSON report instead of the table.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled property suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sampled cases per property check.
    #[arg(long, global = true, default_value_t = 64)]
    trials: u32,
    /// Refuse to build models with more elements than this.
    #[arg(long, global = true, default_value_t = molec_core::DEFAULT_MAX_RING_SIZE, value_name = "N")]
    max_ring_size: u64,
    /// Also write the rendered report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Describe the ambient: presentation, target, certificate.
    Info,
    /// List every ideal containing the target.
    Enumerate,
    /// Count overideals, divisors, and molecule divisors of the target.
    Census,
    /// Enumerate every factorization of the target into molecules.
    Molecularize,
    /// Run the law checks over the ambient's ideals.
    PropertySuite,
    /// Run a named experiment (butts, theorem10, prop13-3, dedekind-poly,
    /// dplusm, quadratic); each builds its own ambient.
    Experiment {
        name: String,
        /// Integer whose ideal (n) gets factored (butts).
        #[arg(long)]
        n: Option<u64>,
        /// Coefficient field size (theorem10).
        #[arg(long)]
        q: Option<u64>,
        /// Characteristic (prop13-3, dedekind-poly).
        #[arg(long)]
        p: Option<u64>,
        /// Truncation depth (dplusm).
        #[arg(long)]
        trunc: Option<usize>,
        /// Squarefree negative discriminant (quadratic).
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let ambient = match &cli.ambient {
        None => AmbientConfig::Integers { n: 12 },
        Some(path) => {
            let text = match std::fs::read_to_string(path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("reading {}: {e}", path.display());
                    return ExitCode::from(EXIT_CONFIG as u8);
                }
            };
            match parse_ambient(&text) {
                Ok(cfg) => cfg,
                Err(e) => {
                    eprintln!("{e}");
                    return ExitCode::from(EXIT_CONFIG as u8);
                }
            }
        }
    };

    let command = match cli.command {
        CliCommand::Info => Command::Info,
        CliCommand::Enumerate => Command::Enumerate,
        CliCommand::Census => Command::Census,
        CliCommand::Molecularize => Command::Molecularize,
        CliCommand::PropertySuite => Command::PropertySuite,
        CliCommand::Experiment { name, n, q, p, trunc, d } => Command::Experiment {
            name,
            args: ExperimentArgs { n, q, p, trunc, d },
        },
    };

    let cfg = RunConfig {
        ambient,
        command,
        seed: cli.seed,
        trials: cli.trials,
        max_ring_size: cli.max_ring_size,
        json: cli.json,
        out: cli.out,
    };
    let result = run(&cfg);
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    ExitCode::from(result.code as u8)
}
