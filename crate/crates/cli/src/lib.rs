//! Configuration parsing, sweep execution and tabular emission for the
//! `magsim` command-line tool.
//!
//! The configuration file is flat TOML with unit-suffixed keys (`*_hz`,
//! `*_mw`, `*_k`), either naming a preset scenario (with optional parameter
//! overrides) or describing an inline sweep. Results are emitted as CSV or
//! JSON with floats at 17 significant digits, so files round-trip exactly
//! and identical configurations produce byte-identical output at any worker
//! count.

pub mod config;
pub mod emit;
pub mod run;

pub use config::{parse_config, OutputFormat, RunConfig};
pub use emit::emit;
pub use run::{execute, CliError, Command};
