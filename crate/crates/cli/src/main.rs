use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use magsim::{execute, CliError, Command, OutputFormat};

/// Simulator for a two-cavity magnomechanical system: directional microwave
/// transmission and pairwise Gaussian entanglement over parameter sweeps.
#[derive(Parser)]
#[command(name = "magsim", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Run a named preset sweep (see `list`)
    Run {
        /// Preset name, e.g. fig2b
        preset: String,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format: csv or json
        #[arg(long)]
        format: Option<String>,
        /// Worker thread count (falls back to MAGSIM_THREADS)
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Run a sweep described by a TOML config file
    Sweep {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        format: Option<String>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Print the linearization-validity report for a configuration
    Check {
        #[arg(long)]
        config: PathBuf,
    },
    /// List the available presets
    List,
}

fn to_command(sub: Sub) -> Result<Command, CliError> {
    let parse_format = |f: Option<String>| -> Result<Option<OutputFormat>, CliError> {
        f.map(|s| OutputFormat::from_key(&s)).transpose()
    };
    Ok(match sub {
        Sub::Run {
            preset,
            out,
            format,
            threads,
        } => Command::Run {
            preset,
            out,
            format: parse_format(format)?,
            threads,
        },
        Sub::Sweep {
            config,
            out,
            format,
            threads,
        } => Command::Sweep {
            config,
            out,
            format: parse_format(format)?,
            threads,
        },
        Sub::Check { config } => Command::Check { config },
        Sub::List => Command::List,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = to_command(cli.command).and_then(|cmd| execute(&cmd));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("magsim: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
