use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use projlink_cli::campaigns::{self, Query, Settings};
use projlink_cli::{Catalog, Report};
use projlink_core::{par, Error, Result};

/// Minors, exchanges and projective-plane drawings for intrinsic linking.
#[derive(Parser, Debug)]
#[command(name = "projlink", version)]
struct Cli {
    /// Catalog directory holding manifest.tsv.
    #[arg(long, global = true, default_value = "data")]
    catalog: PathBuf,
    /// Worker threads for candidate sweeps.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Reserved. Nothing here is random, so the flag is rejected.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reproduce one of the headline results.
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Exhaustive searches.
    Search {
        #[command(subcommand)]
        what: Search,
    },
    /// Test one graph against a property.
    Check {
        file: String,
        #[command(subcommand)]
        query: CheckQuery,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Link conditions for a signed drawing.
    LinkConditions { file: String },
    /// Embedding enumeration.
    Embed {
        #[command(subcommand)]
        what: Embed,
    },
}

#[derive(Subcommand, Debug)]
enum Verify {
    PetersenClosure,
    DeltayTable,
    C11,
    Archdeacon,
}

#[derive(Subcommand, Debug)]
enum Search {
    Sixteen {
        /// Node budget for each minor search.
        #[arg(long)]
        budget: Option<u64>,
        /// Also write the report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum CheckQuery {
    Minor { pattern: String },
    Planar,
    ProjectivePlanar,
    Outerplanar,
}

#[derive(Subcommand, Debug)]
enum Embed {
    Enumerate {
        file: String,
        #[arg(long)]
        max: Option<usize>,
    },
}

fn settings(budget: Option<u64>) -> Settings {
    let mut s = Settings::default();
    if let Some(b) = budget {
        s.minor_budget = b;
    }
    s
}

fn run(cli: Cli) -> Result<(Report, Option<PathBuf>)> {
    if cli.seedless {
        return Err(Error::PreconditionViolated("--seedless is reserved: no command uses randomness"));
    }
    let catalog = || Catalog::load(&cli.catalog);
    let optional = Catalog::load(&cli.catalog).ok();
    let mut out = None;
    let mut report = par::with_workers(cli.workers, || -> Result<Report> {
        Ok(match &cli.command {
            Command::Verify { what } => {
                let cat = catalog()?;
                let mut r = match what {
                    Verify::PetersenClosure => campaigns::verify_petersen_closure(&cat, settings(None))?,
                    Verify::DeltayTable => campaigns::verify_deltay_table(settings(None))?,
                    Verify::C11 => campaigns::verify_c11(&cat, settings(None))?,
                    Verify::Archdeacon => campaigns::verify_archdeacon(&cat, settings(None))?,
                };
                r.digest = Some(cat.digest().to_string());
                r
            }
            Command::Search { what: Search::Sixteen { budget, out: file } } => {
                let cat = catalog()?;
                out = file.clone();
                let mut r = campaigns::search_sixteen(&cat, settings(*budget))?;
                r.digest = Some(cat.digest().to_string());
                r
            }
            Command::Check { file, query, budget } => {
                let q = match query {
                    CheckQuery::Minor { pattern } => Query::Minor(pattern.clone()),
                    CheckQuery::Planar => Query::Planar,
                    CheckQuery::ProjectivePlanar => Query::ProjectivePlanar,
                    CheckQuery::Outerplanar => Query::Outerplanar,
                };
                campaigns::check(optional.as_ref(), file, &q, settings(*budget))?
            }
            Command::LinkConditions { file } => campaigns::link_conditions(file)?,
            Command::Embed { what: Embed::Enumerate { file, max } } => {
                campaigns::embed_enumerate(optional.as_ref(), file, *max, settings(None))?
            }
        })
    })?;
    if report.digest.is_none() {
        report.digest = optional.map(|c| c.digest().to_string());
    }
    Ok((report, out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, out)) => {
            let text = report.render();
            print!("{text}");
            if let Some(path) = out {
                if let Err(e) = fs::write(&path, &text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            eprintln!("{}", report.summary());
            ExitCode::from(report.verdict.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
