//! `manin`: check, construct and extract exact algebraic structures.
//!
//! Exit codes: 0 pass, 1 mathematical failure, 2 usage or input error.

mod commands;
mod fuzz;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::output::CliError;

#[derive(Parser)]
#[command(name = "manin", version, about = "Exact verification of Lie bialgebras, Manin triples and CA-groupoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full axiom suite for a structure file.
    Check {
        file: PathBuf,
        /// Expected kind; a file of another kind is rejected.
        #[arg(long)]
        kind: Option<String>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Construct a derived structure.
    Build {
        #[arg(value_enum)]
        what: BuildKind,
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Recover the data a structure was built from.
    Extract {
        #[arg(value_enum)]
        what: ExtractKind,
        input: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate random instances and cross-check independent verdicts.
    Fuzz {
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Dimension range, `N` or `MIN-MAX`.
        #[arg(long, default_value = "1-4")]
        dims: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check instances on all cores.
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        json: bool,
    },
    /// Inspect the built-in catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Entry names with kind and description.
    List,
    /// Print an entry's structure file.
    Show { name: String },
    /// Re-check every entry against its recorded verdicts.
    Verify {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum BuildKind {
    /// Drinfeld double of a bialgebra, with both factors.
    Double,
    /// Quadratic Lie 2-algebra of a co-quadratic Lie algebra.
    CaFromCoquad,
    /// Double of a Lie 2-bialgebra, with both factors.
    #[value(name = "double-2")]
    Double2,
    /// Dual 2-vector space.
    DualVb,
    /// Coboundary bialgebra of an r-matrix.
    RmatrixBialgebra,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ExtractKind {
    /// Bialgebra from a Manin triple.
    Bialgebra,
    /// Co-quadratic Lie algebra from a quadratic Lie 2-algebra.
    Coquad,
    /// Lie 2-bialgebra from a quadratic Lie 2-algebra with two factors.
    Lie2Bialgebra,
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Check { file, kind, json } => commands::check(&file, kind.as_deref(), json),
        Command::Build { what, input, output, json } => commands::build(what, &input, &output, json),
        Command::Extract { what, input, output, json } => commands::extract(what, &input, &output, json),
        Command::Fuzz { kind, count, dims, seed, parallel, json } => {
            let dims = fuzz::parse_dims(&dims)?;
            fuzz::run(&fuzz::FuzzConfig { kind, count, dims, seed, parallel }, json)
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => commands::catalog_list(),
            CatalogAction::Show { name } => commands::catalog_show(&name),
            CatalogAction::Verify { json } => commands::catalog_verify(json),
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
