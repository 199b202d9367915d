//! `specmatch` command line: analyze single graphs, construct families and
//! scan graph6 corpora for counterexamples.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use specmatch::bounds::BoundsError;
use specmatch::{FamilyError, GraphError, SpectralError, DEFAULT_EPSILON};
use thiserror::Error;

pub mod commands;
pub mod format;
pub mod report;

use commands::{AnalyzeArgs, ScanArgs, DEFAULT_GRID};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Family {
    CompleteBipartite,
    FamilyB,
    JoinException,
    Random,
}

#[derive(Debug, Parser)]
#[command(
    name = "specmatch",
    version,
    about = "Spectral conditions for fractional matchings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every condition on one graph.
    Analyze {
        graph6: String,
        #[arg(long, default_value_t = 0.0)]
        a: f64,
        #[arg(long, default_value_t = 1.0)]
        b: f64,
        /// Exact decimal or fraction.
        #[arg(long, default_value = "1")]
        k: String,
        /// Defaults to a / (a + b).
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check a graph6 corpus (one graph per line, `-` for stdin) over a parameter grid.
    Scan {
        corpus: String,
        #[arg(default_value = DEFAULT_GRID)]
        grid: String,
        /// Comma-separated alphas; defaults to a / (a + b) per grid pair, and 1.
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Emit graph6 lines for a graph family.
    Construct {
        family: Family,
        /// e.g. `delta=2,k=1,m=2` or `n=12,p=0.4,count=100`.
        #[arg(default_value = "")]
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = match &cli.command {
        Command::Analyze {
            graph6,
            a,
            b,
            k,
            alpha,
            epsilon,
            out,
            json,
        } => commands::analyze(&AnalyzeArgs {
            graph6,
            a: *a,
            b: *b,
            k,
            alpha: *alpha,
            epsilon: *epsilon,
            out: out.as_deref(),
            json: *json,
        }),
        Command::Scan {
            corpus,
            grid,
            alpha,
            epsilon,
            out,
            json,
            jobs,
        } => {
            let jobs = if *jobs == 0 {
                std::thread::available_parallelism().map_or(1, |n| n.get())
            } else {
                *jobs
            };
            commands::scan(
                &ScanArgs {
                    corpus,
                    grid,
                    alpha: alpha.as_deref(),
                    epsilon: *epsilon,
                    out: out.as_deref(),
                    json: *json,
                    jobs,
                },
                stderr,
            )
        }
        Command::Construct {
            family,
            params,
            seed,
            out,
        } => commands::construct(*family, params, *seed, out.as_deref()),
    };
    match result {
        Ok(status) => status.code(),
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}
