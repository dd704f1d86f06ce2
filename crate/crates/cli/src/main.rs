//! `mcf`: expansions, semiconvergent tables, indecomposable catalogs, Pythagoras reports and
//! batch scans of totally real cubic orders.
//!
//! Exit codes: `0` on success (including periodic and terminated expansions), `1` on parse
//! and other errors, `2` when an expansion exhausts its iteration bound, `3` when an operation
//! needs fundamental units that the order does not carry.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Multidimensional continued fractions and indecomposables in cubic orders.
#[derive(Debug, Parser)]
#[command(name = "mcf", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Runs a JPA, iJPA or Brun expansion and writes the record.
    Expand(ExpandArgs),
    /// Classifies the semiconvergents of a periodic JPA expansion.
    Classify(ClassifyArgs),
    /// Dumps the closed-form indecomposable catalog of a family.
    Catalog(CatalogArgs),
    /// Computes the minimal number of squares of a totally positive element.
    Pythagoras(PythagorasArgs),
    /// Scans the fields of an ingest file.
    Scan(ScanArgs),
}

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Expansion algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Jpa,
    Ijpa,
    Brun,
}

/// Options shared by every command that works on a single order.
#[derive(Debug, Args)]
pub struct OrderArgs {
    /// Family spec: `ennola1:a=5`, `ennola2:a=6`, `simplest:a=4`, `ab:a=2,b=4` or
    /// `generic:p=0,q=-3,r=1[,u1=(..),u2=(..)]`.
    #[arg(long)]
    pub family: String,
    /// Tracking root, as a label (`rho`, `rho'`, `psi''`, ...) or an approximate value.
    #[arg(long)]
    pub root: Option<String>,
}

/// Output destination and format.
#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub order: OrderArgs,
    /// Algorithm.
    #[arg(long, value_enum, default_value = "jpa")]
    pub algo: Algo,
    /// Input vector: `abs` for `(1, |t|, t^2)` or three coordinate triples such as
    /// `1,0,0;2,0,0;3,0,0`.
    #[arg(long, default_value = "abs")]
    pub vector: String,
    /// Iteration bound.
    #[arg(long, env = "MCF_MAX_ITER", default_value_t = mcf_core::mcf::DEFAULT_MAX_ITER)]
    pub max_iter: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub order: OrderArgs,
    /// Input vector, as for `expand`.
    #[arg(long, default_value = "abs")]
    pub vector: String,
    /// Iteration bound.
    #[arg(long, env = "MCF_MAX_ITER", default_value_t = mcf_core::mcf::DEFAULT_MAX_ITER)]
    pub max_iter: usize,
    /// Trace bound of the indecomposable harvest used for orders without a catalog.
    #[arg(long, default_value_t = 40)]
    pub trace_bound: i64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[command(flatten)]
    pub order: OrderArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PythagorasArgs {
    /// Family spec; may be repeated to run several parameters.
    #[arg(long, required = true)]
    pub family: Vec<String>,
    /// Target element as a coordinate triple; defaults to the Ennola I witness element.
    #[arg(long)]
    pub gamma: Option<String>,
    /// Largest number of squares tried.
    #[arg(long, default_value_t = mcf_core::pythagoras::DEFAULT_CAP)]
    pub cap: usize,
    /// Worker threads across families.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// JSON ingest file: an array of `{poly:{p,q,r}, root?, units?, note?}`.
    #[arg(long)]
    pub input: PathBuf,
    /// Trace bound of the indecomposable harvest.
    #[arg(long, default_value_t = 40)]
    pub trace_bound: i64,
    /// Iteration bound.
    #[arg(long, env = "MCF_MAX_ITER", default_value_t = mcf_core::mcf::DEFAULT_MAX_ITER)]
    pub max_iter: usize,
    /// Worker threads across fields.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[command(flatten)]
    pub out: OutputArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(commands::error_code(&e))
        }
    }
}
