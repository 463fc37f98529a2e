//! Subcommand execution and exit-code policy: configuration problems exit
//! with 1, runtime failures (no steady state, solver breakdown, I/O) with 2.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use thiserror::Error;

use magsim_core::mean_field::{
    steady_state_closed_form, steady_state_self_consistent, MeanFieldMethod,
};
use magsim_core::params::{Direction, DriveConfig};
use magsim_core::scenarios::{preset, run_sweep, SweepSpec, PRESET_NAMES};
use magsim_core::validation::{drive_mapping_discrepancy, validation_report, SmallnessVerdict};

use crate::config::{parse_config, OutputFormat, RunConfig};
use crate::emit::emit;

pub const THREADS_ENV: &str = "MAGSIM_THREADS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 1,
            CliError::Runtime(_) => 2,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Command {
    Run {
        preset: String,
        out: Option<PathBuf>,
        format: Option<OutputFormat>,
        threads: Option<usize>,
    },
    Sweep {
        config: PathBuf,
        out: Option<PathBuf>,
        format: Option<OutputFormat>,
        threads: Option<usize>,
    },
    Check {
        config: PathBuf,
    },
    List,
}

/// Worker count: CLI flag, then config file, then MAGSIM_THREADS, then the
/// machine's available parallelism.
fn resolve_threads(cli: Option<usize>, config: Option<usize>) -> Result<usize, CliError> {
    if let Some(t) = cli.or(config) {
        if t < 1 {
            return Err(CliError::Config("--threads must be >= 1".into()));
        }
        return Ok(t);
    }
    if let Ok(raw) = std::env::var(THREADS_ENV) {
        let t: usize = raw
            .parse()
            .map_err(|_| CliError::Config(format!("{THREADS_ENV}={raw} is not a thread count")))?;
        if t < 1 {
            return Err(CliError::Config(format!("{THREADS_ENV} must be >= 1")));
        }
        return Ok(t);
    }
    Ok(std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1))
}

fn run_and_emit(
    spec: &SweepSpec,
    threads: usize,
    format: OutputFormat,
    out: Option<&PathBuf>,
) -> Result<(), CliError> {
    let result = run_sweep(spec, threads).map_err(|e| CliError::Runtime(e.to_string()))?;
    match out {
        Some(path) => {
            let mut file = fs::File::create(path)
                .map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", path.display())))?;
            emit(&result, format, &mut file)
                .map_err(|e| CliError::Runtime(format!("write {}: {e}", path.display())))?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            emit(&result, format, &mut lock)
                .map_err(|e| CliError::Runtime(format!("write stdout: {e}")))?;
        }
    }
    Ok(())
}

fn load_config(path: &PathBuf) -> Result<RunConfig, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    parse_config(&text)
}

fn check_report(config: &RunConfig, sink: &mut dyn Write) -> Result<(), CliError> {
    let params = config.build_params()?;
    let io_err = |e: std::io::Error| CliError::Runtime(format!("write report: {e}"));

    writeln!(
        sink,
        "{:<12} {:>13} {:>13} {:>13} {:>10} {:>7} {:>13} {:>13} {:>11} {:>6}",
        "direction",
        "m_occ_exact",
        "m_occ_simpl",
        "m_occ_ordfreq",
        "bound_5N",
        "occ_ok",
        "kerr_rad_s",
        "drive_rad_s",
        "kerr_ratio",
        "kerr"
    )
    .map_err(io_err)?;

    for direction in [Direction::Forward, Direction::Backward, Direction::MagnonOnly] {
        let drives = DriveConfig::from_params(&params, direction)
            .map_err(|e| CliError::Runtime(e.to_string()))?;
        let state = match config.meanfield_mode {
            MeanFieldMethod::ClosedForm => steady_state_closed_form(&params, &drives),
            MeanFieldMethod::SelfConsistent => {
                steady_state_self_consistent(&params, &drives, 1e-10, 1000).map(|r| r.state)
            }
        }
        .map_err(|e| CliError::Runtime(e.to_string()))?;
        let r = validation_report(&params, &state, &drives);
        let verdict = match r.kerr_verdict {
            SmallnessVerdict::Pass => "pass",
            SmallnessVerdict::Warn => "warn",
            SmallnessVerdict::Fail => "fail",
        };
        writeln!(
            sink,
            "{:<12} {:>13.5e} {:>13.5e} {:>13.5e} {:>10.3e} {:>7} {:>13.5e} {:>13.5e} {:>11.3e} {:>6}",
            direction.to_string(),
            r.m_occupancy,
            r.m_occupancy_simplified,
            r.m_occupancy_simplified_ordinary,
            r.occupancy_bound,
            r.occupancy_ok,
            r.kerr_term,
            r.drive_sum,
            r.kerr_ratio,
            verdict
        )
        .map_err(io_err)?;
    }

    let (formula, quoted, ratio) =
        drive_mapping_discrepancy(&params).map_err(|e| CliError::Runtime(e.to_string()))?;
    writeln!(
        sink,
        "note: the simplified occupancy is shown in consistent angular units and in the \
         ordinary-frequency reading ((2pi)^2 larger)."
    )
    .map_err(io_err)?;
    writeln!(
        sink,
        "note: E(189 mW) = {formula:.4e} rad/s from sqrt(kappa P / hbar omega_d); a commonly \
         quoted calibration is {quoted:.1e} (ratio {ratio:.3}). The formula value is used throughout."
    )
    .map_err(io_err)?;
    Ok(())
}

/// Execute one subcommand.
pub fn execute(cmd: &Command) -> Result<(), CliError> {
    match cmd {
        Command::Run {
            preset: name,
            out,
            format,
            threads,
        } => {
            let spec = preset(name).map_err(|e| CliError::Config(e.to_string()))?;
            let threads = resolve_threads(*threads, None)?;
            run_and_emit(&spec, threads, format.unwrap_or_default(), out.as_ref())
        }
        Command::Sweep {
            config,
            out,
            format,
            threads,
        } => {
            let cfg = load_config(config)?;
            let spec = cfg.build_spec()?;
            let threads = resolve_threads(*threads, cfg.threads)?;
            let format = format.unwrap_or(cfg.format);
            let out = out.clone().or_else(|| cfg.out.clone());
            run_and_emit(&spec, threads, format, out.as_ref())
        }
        Command::Check { config } => {
            let cfg = load_config(config)?;
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            check_report(&cfg, &mut lock)
        }
        Command::List => {
            for name in PRESET_NAMES {
                let desc = magsim_core::scenarios::preset_description(name)
                    .expect("every listed preset has a description");
                println!("{name:<7} {desc}");
            }
            Ok(())
        }
    }
}
