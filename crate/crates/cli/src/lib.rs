//! Command-line laboratory for factoring ideals of finite ring models into
//! molecules.  The library half parses ambient documents, runs one command,
//! and renders a deterministic report; the binary half is argument parsing
//! plus process exit codes.

pub mod config;
pub mod experiments;
pub mod report;

use std::path::PathBuf;

use molec_core::construct::BuildOptions;
use molec_core::factor::{divisor_census, molecularize};
use molec_core::ideal::enumerate_overideals;
use molec_core::props::property_suite;
use molec_core::Error;

use config::AmbientConfig;
use experiments::{run_experiment, ExperimentArgs};
use report::{
    census_payload, molecularize_payload, suite_payload, IdealJson, Payload, Report, SCHEMA,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Info,
    Enumerate,
    Census,
    Molecularize,
    PropertySuite,
    Experiment { name: String, args: ExperimentArgs },
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub ambient: AmbientConfig,
    pub command: Command,
    pub seed: u64,
    pub trials: u32,
    pub max_ring_size: u64,
    pub json: bool,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(ambient: AmbientConfig, command: Command) -> RunConfig {
        RunConfig {
            ambient,
            command,
            seed: 0,
            trials: 64,
            max_ring_size: molec_core::DEFAULT_MAX_RING_SIZE,
            json: false,
            out: None,
        }
    }
}

/// Everything `run` hands back to the process shell.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn failure(code: i32, message: String) -> RunResult {
    RunResult { code, stdout: String::new(), stderr: message }
}

fn error_result(e: &Error) -> RunResult {
    match e {
        Error::SizeGuardExceeded { size, limit } => failure(
            EXIT_GUARD,
            format!("size guard: the model needs {size} elements, limit {limit}\n"),
        ),
        other => failure(EXIT_CONFIG, format!("configuration: {other}\n")),
    }
}

/// Produces the report for `cfg`; any [`Error`] is a configuration or
/// guard problem, never a mathematical finding.
fn execute(cfg: &RunConfig) -> Result<(Report, bool), Error> {
    let opts = BuildOptions { max_ring_size: cfg.max_ring_size };
    let limit = cfg.max_ring_size;

    if let Command::Experiment { name, args } = &cfg.command {
        let (amb, exp) = run_experiment(name, args, &opts, limit)?;
        let passed = exp.passed();
        let report = Report {
            schema: SCHEMA,
            ambient: amb.label.clone(),
            ring_size: amb.ring.size() as u64,
            payload: Payload::Experiment(exp),
        };
        return Ok((report, passed));
    }

    let amb = cfg.ambient.build(&opts)?;
    let (payload, passed) = match &cfg.command {
        Command::Info => (
            Payload::Info {
                rank: amb.ring.rank(),
                orders: amb.ring.orders().to_vec(),
                target: IdealJson::of(&amb.target),
                certified: amb.exactness_exponent.is_some(),
                exactness_exponent: amb.exactness_exponent,
            },
            true,
        ),
        Command::Enumerate => {
            let over = enumerate_overideals(&amb.target, limit)?;
            (
                Payload::Enumerate {
                    count: over.len(),
                    overideals: over.iter().map(IdealJson::of).collect(),
                },
                true,
            )
        }
        Command::Census => {
            let census = divisor_census(&amb.target, limit)?;
            (census_payload(&census), true)
        }
        Command::Molecularize => {
            let rep = molecularize(&amb.target, limit)?;
            (molecularize_payload(&rep), true)
        }
        Command::PropertySuite => {
            let rep = property_suite(&amb, cfg.seed, cfg.trials, limit)?;
            let ok = rep.passed();
            (suite_payload(&rep, cfg.trials), ok)
        }
        Command::Experiment { .. } => unreachable!("handled above"),
    };
    let report = Report {
        schema: SCHEMA,
        ambient: amb.label.clone(),
        ring_size: amb.ring.size() as u64,
        payload,
    };
    Ok((report, passed))
}

/// Runs one command end to end: build, compute, render, optionally write
/// the report file.  Exit code 0 = success, 1 = a suite or experiment found
/// a violation, 2 = configuration error, 3 = size-guard rejection.
pub fn run(cfg: &RunConfig) -> RunResult {
    let (report, passed) = match execute(cfg) {
        Ok(v) => v,
        Err(e) => return error_result(&e),
    };
    let rendered = if cfg.json { report.to_json() } else { report.to_table() };
    if let Some(path) = &cfg.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            return failure(EXIT_CONFIG, format!("writing {}: {e}\n", path.display()));
        }
    }
    RunResult {
        code: if passed { EXIT_OK } else { EXIT_VIOLATION },
        stdout: rendered,
        stderr: String::new(),
    }
}
