//! The `poincare` command line.

mod cache;
mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::canonical::Format;
use crate::springer::Kind;

pub use cache::{atomic_write, Cache, CACHE_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "poincare",
    version,
    about = "Poincaré series of joint invariants and covariants of two binary forms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the series for one pair of degrees.
    Compute(RunArgs),
    /// Check a series prefix against the weight-counting oracle.
    Verify(RunArgs),
    /// Write one JSON file per pair and kind for all d1 ≤ d2 ≤ max.
    Table(RunArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Invariants,
    Covariants,
    Both,
}

impl KindArg {
    pub fn kinds(self) -> &'static [Kind] {
        match self {
            KindArg::Invariants => &[Kind::Invariants],
            KindArg::Covariants => &[Kind::Covariants],
            KindArg::Both => &Kind::ALL,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Latex,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Latex => Format::Latex,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Debug, Args)]
pub struct RunArgs {
    /// Degree of the first form (an upper bound for `table`).
    #[arg(long)]
    pub d1: Option<u32>,
    /// Degree of the second form (an upper bound for `table`).
    #[arg(long)]
    pub d2: Option<u32>,
    /// Upper bound on both degrees for `table`.
    #[arg(long)]
    pub max: Option<u32>,
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
    /// Number of series coefficients, z^0 .. z^{N-1}.
    #[arg(long)]
    pub terms: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: FormatArg,
    /// Output file, or output directory for `table`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for `table`.
    #[arg(long, default_value_t = default_jobs(), value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: u32,
    #[arg(long, env = "POINCARE_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
}

fn default_jobs() -> u32 {
    std::thread::available_parallelism().map_or(1, |n| n.get() as u32)
}

/// Parses `args` and runs the command, writing to the given streams.
/// Returns the process exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Compute(a) => commands::compute(a, stdout, stderr),
        Command::Verify(a) => commands::verify(a, stdout, stderr),
        Command::Table(a) => commands::table(a, stdout, stderr),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
