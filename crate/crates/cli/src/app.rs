//! Argument parsing and dispatch.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::commands::{self, AnalyzeOpts, Artifact, CheckOpts, ConstructOpts, PeelOpts};
use crate::files::{self, InputError};
use crate::report::Outcome;

#[derive(Parser)]
#[command(name = "jforge", version, about = "Exact computations with pseudo-euclidean Jordan algebras")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Jordan, pseudo-euclidean, symplectic and Manin predicates.
    Check {
        #[arg(long)]
        jordan: bool,
        #[arg(long)]
        pe: bool,
        #[arg(long)]
        symplectic: bool,
        #[arg(long)]
        manin: bool,
        /// Subspace names used by --manin.
        #[arg(long, default_value = "U")]
        u: String,
        #[arg(long, default_value = "V")]
        v: String,
        file: String,
    },
    /// Albert form, Casimir operator, radical, index, Fitting and reductive reports.
    Analyze {
        #[arg(long)]
        albert: bool,
        #[arg(long)]
        casimir: bool,
        #[arg(long)]
        radical: bool,
        #[arg(long)]
        index: bool,
        #[arg(long)]
        fitting: bool,
        #[arg(long)]
        reductive: bool,
        /// Accept a table that fails the Jordan check (albert, radical and index only).
        #[arg(long)]
        no_verify: bool,
        file: String,
    },
    /// Run an extension machine.
    Construct(ConstructArgs),
    /// Invert an extension.
    Peel {
        #[arg(value_parser = ["gde", "de", "symp", "manin", "symp-manin"])]
        kind: String,
        file: String,
        /// Direction for `gde`: a label or `label=coef,...`.
        #[arg(long)]
        b: Option<String>,
        /// Subspace name of the ideal for `de`.
        #[arg(long)]
        ideal: Option<String>,
        /// Write the peeled base here.
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Tits-Kantor-Koecher algebra.
    Tkk {
        #[command(subcommand)]
        command: TkkCommand,
    },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_parser = ["tstar", "central", "sdp", "gsd", "de", "gde", "sympde", "manin-de", "drinfeld"])]
    machine: String,
    #[arg(long)]
    algebra: Option<String>,
    #[arg(long)]
    base: Option<String>,
    #[arg(long)]
    top: Option<String>,
    #[arg(long)]
    j1: Option<String>,
    #[arg(long)]
    j2: Option<String>,
    /// Pair, representation or cocycle file.
    #[arg(long, visible_aliases = ["pair", "rep", "cocycle"])]
    data: Option<String>,
    #[arg(long)]
    name: Option<String>,
    #[arg(short, long)]
    output: Option<String>,
}

#[derive(Subcommand)]
enum TkkCommand {
    Build {
        file: String,
        /// Derivation file (`{"d": ...}`) to lift.
        #[arg(long)]
        lift: Option<String>,
        #[arg(long)]
        check_d1: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Get {
        name: String,
        /// Parameter `name=value`; repeatable.
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<String>,
    },
}

/// Report, plus an artifact to write to `output` or print in place of the report.
struct Run {
    outcome: Outcome,
    artifact: Option<Artifact>,
    output: Option<String>,
    print_artifact: bool,
}

fn run(cli: Cli) -> Result<Run, InputError> {
    let plain = |outcome| Run { outcome, artifact: None, output: None, print_artifact: false };
    Ok(match cli.command {
        Command::Check { jordan, pe, symplectic, manin, u, v, file } => {
            plain(commands::check(&file, &CheckOpts { jordan, pe, symplectic, manin, u, v })?)
        }
        Command::Analyze { albert, casimir, radical, index, fitting, reductive, no_verify, file } => {
            plain(commands::analyze(&file, &AnalyzeOpts { albert, casimir, radical, index, fitting, reductive, no_verify })?)
        }
        Command::Construct(a) => {
            let o = ConstructOpts { algebra: a.algebra, base: a.base, top: a.top, j1: a.j1, j2: a.j2, data: a.data, name: a.name };
            let (outcome, artifact) = commands::construct(&a.machine, &o)?;
            if let Some(art) = &artifact {
                commands::reparse(art)?;
            }
            let print_artifact = a.output.is_none();
            Run { outcome, artifact, output: a.output, print_artifact }
        }
        Command::Peel { kind, file, b, ideal, output } => {
            let (outcome, artifact) = commands::peel(&kind, &file, &PeelOpts { b, ideal })?;
            Run { outcome, artifact, output, print_artifact: false }
        }
        Command::Tkk { command: TkkCommand::Build { file, lift, check_d1 } } => plain(commands::tkk(&file, lift.as_deref(), check_d1)?),
        Command::Catalog { command: CatalogCommand::List } => plain(commands::catalog_list()?),
        Command::Catalog { command: CatalogCommand::Get { name, params, output } } => {
            let (outcome, artifact) = commands::catalog_get(&name, &params)?;
            let print_artifact = output.is_none();
            Run { outcome, artifact, output, print_artifact }
        }
    })
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Ok(r) => {
            if let (Some(path), Some(art)) = (&r.output, &r.artifact) {
                if let Err(e) = std::fs::write(path, &art.text) {
                    eprintln!("error: {path}: {e}");
                    return ExitCode::from(2);
                }
            }
            match (&r.artifact, r.print_artifact) {
                (Some(art), true) => print!("{}", art.text),
                _ => print!("{}", files::to_text(&r.outcome.report)),
            }
            if r.outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
