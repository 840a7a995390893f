//! `dualcx`: batch front end for Δ-complexes and SNC blow-up scripts.
//!
//! Every command writes a JSON report with a `schema_version`, an echo of
//! the command, the seed, a `timing` block, and either a `result` or an
//! `error` object. The exit status is 0 exactly when there is no error.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Parser)]
#[command(
    name = "dualcx",
    version,
    about = "Dual complexes, homology and combinatorial blow-ups"
)]
struct Cli {
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Check a complex, configuration or script file.
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Rational Betti numbers.
    Homology {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        reduced: bool,
    },
    /// Star subdivision at a simplex.
    Subdivide {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        tau: String,
        #[arg(long, default_value = "v")]
        new_vertex: String,
        /// Also write the resulting complex to this file.
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// Cone extension at comma-separated id lists.
    ConeExtend {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "")]
        delta: String,
        #[arg(long, default_value = "")]
        delta0: String,
        #[arg(long, default_value = "v")]
        new_vertex: String,
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// Simplicial product, and optionally the staircase triangulation.
    Product {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        triangulated: bool,
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// Replay a blow-up script on a configuration.
    BlowupRun {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        script: PathBuf,
        /// Also write the final dual complex to this file.
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// Track an embedded pair through a paired script.
    PairRun {
        #[arg(long)]
        pair: PathBuf,
        #[arg(long)]
        script: PathBuf,
    },
    /// Compare Betti numbers of two complexes.
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Greedy collapse onto a subcomplex given as comma-separated ids.
    Collapse {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        target: String,
    },
    /// Materialize a builtin complex or configuration.
    Example {
        name: String,
        #[arg(long)]
        write: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = commands::execute(&cli.command, cli.seed);
    let echo = report::to_value(&cli.command);
    let text = report::render(echo, cli.seed, &outcome, start.elapsed());
    let written = match &cli.out {
        Some(path) => input::write(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("dualcx: {e}");
        return ExitCode::from(2);
    }
    match outcome {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dualcx: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
