mod checks;
mod output;
mod tables;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand};
use zigzag_core::oracles::{oracle_crosscheck, OracleError};
use zigzag_core::zigzag::{Cache, CacheError};

use checks::Suite;
use output::{DocKind, Format, OutputDoc};
use tables::{PolyKind, Source, TableKind};

const EXIT_VIOLATION: u8 = 1;
const EXIT_RESOURCE: u8 = 3;

#[derive(Parser)]
#[command(name = "zigzag", version, about = "Exact tables and checks for zig-zag Eulerian polynomials")]
struct Cli {
    /// Directory for the table cache. Falls back to $CACHE_DIR; no cache when neither is set.
    #[arg(long, global = true, env = "CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

type Bound = clap::builder::RangedU64ValueParser<usize>;

fn bound() -> Bound {
    Bound::new().range(1..)
}

#[derive(Subcommand)]
enum Command {
    /// Print one of the tables of coefficients or values.
    Table {
        #[arg(long, value_enum)]
        kind: TableKind,
        #[arg(long, default_value_t = 10, value_parser = bound())]
        max_n: usize,
        #[arg(long, default_value_t = 8, value_parser = bound())]
        max_m: usize,
        /// Rank of the chainlink poset, required for `zr`.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print a list of polynomials or rational functions.
    Poly {
        #[arg(long, value_enum)]
        kind: PolyKind,
        #[arg(long, default_value_t = 10, value_parser = bound())]
        max_n: usize,
        #[arg(long, default_value_t = 8, value_parser = bound())]
        max_m: usize,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run a verification suite. Exits 1 when a proved statement fails.
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, value_parser = bound())]
        max_n: Option<usize>,
        #[arg(long, value_parser = bound())]
        max_m: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Count Ω_n(m+1) by every independent route and compare.
    Oracle {
        #[arg(long, value_parser = bound())]
        n: usize,
        #[arg(long, value_parser = bound())]
        m: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Inspect or manage the cache directory.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    /// Print the cache location and the stored table sizes.
    Show,
    /// Delete the cache file.
    Clear,
    /// Precompute tables up to the given bounds.
    Warm {
        #[arg(long, default_value_t = 12, value_parser = bound())]
        max_n: usize,
        #[arg(long, default_value_t = 10, value_parser = bound())]
        max_m: usize,
    },
}

enum Failure {
    Usage(String),
    Violation(String),
    Resource(String),
}

impl From<CacheError> for Failure {
    fn from(e: CacheError) -> Self {
        match e {
            CacheError::Zigzag(e) => Failure::Violation(e.to_string()),
            e => Failure::Resource(e.to_string()),
        }
    }
}

fn require_r(r: Option<usize>, needed: bool) -> Result<Option<usize>, Failure> {
    if needed && r.is_none() {
        return Err(Failure::Usage("--r is required for the zr kind".to_string()));
    }
    Ok(r)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cache = cli.cache_dir.map(Cache::new);
    let src = Source { cache: cache.as_ref() };
    match cli.command {
        Command::Table { kind, max_n, max_m, r, format } => {
            let r = require_r(r, kind == TableKind::Zr)?;
            print!("{}", tables::table(kind, max_n, max_m, r, &src)?.render(format));
        }
        Command::Poly { kind, max_n, max_m, r, format } => {
            let r = require_r(r, kind == PolyKind::Zr)?;
            print!("{}", tables::poly(kind, max_n, max_m, r, &src)?.render(format));
        }
        Command::Check { suite, max_n, max_m, format } => {
            let (dn, dm) = suite.default_bounds();
            let outcome = checks::run(suite, max_n.unwrap_or(dn), max_m.unwrap_or(dm));
            print!("{}", outcome.doc.render(format));
            for w in &outcome.warnings {
                eprintln!("WARNING: {w}");
            }
            if outcome.failures > 0 {
                return Err(Failure::Violation(format!("{} check(s) failed", outcome.failures)));
            }
        }
        Command::Oracle { n, m, format } => {
            let report = oracle_crosscheck(n, m).map_err(|e| match e {
                OracleError::TooLarge { .. } => Failure::Resource(e.to_string()),
            })?;
            let mut doc = OutputDoc::new(DocKind::Report, "oracle", vec!["route".into(), "value".into()])
                .param("n", n)
                .param("m", m)
                .param("agreed", report.agreed.as_deref().unwrap_or("no"));
            for rv in &report.routes {
                doc.push(vec![rv.route.clone(), rv.value.clone()]);
            }
            print!("{}", doc.render(format));
            if report.agreed.is_none() {
                return Err(Failure::Violation("counting routes disagree".to_string()));
            }
        }
        Command::Cache { action } => {
            let Some(cache) = cache else {
                return Err(Failure::Usage("cache commands need --cache-dir or CACHE_DIR".to_string()));
            };
            match action {
                CacheAction::Show => {
                    println!("path: {}", cache.path().display());
                    match cache.load()? {
                        Some(f) => {
                            let cols = f.omega.first().map_or(0, |r| r.len().saturating_sub(1));
                            println!("omega: n<={} m<={cols}", f.omega.len().saturating_sub(1));
                            println!("z: n<={}", f.z.len());
                            println!("gamma: n<={}", f.gamma.len());
                            for (k, v) in &f.meta {
                                println!("{k}: {v}");
                            }
                        }
                        None => println!("empty"),
                    }
                }
                CacheAction::Clear => match std::fs::remove_file(cache.path()) {
                    Ok(()) => println!("removed {}", cache.path().display()),
                    Err(e) if e.kind() == std::io::ErrorKind::NotFound => println!("nothing to remove"),
                    Err(e) => return Err(Failure::Resource(e.to_string())),
                },
                CacheAction::Warm { max_n, max_m } => {
                    cache.omega(max_n, max_m)?;
                    cache.z_polys(max_n)?;
                    println!("warmed {} to n<={max_n} m<={max_m}", cache.path().display());
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => Cli::command().error(clap::error::ErrorKind::MissingRequiredArgument, msg).exit(),
        Err(Failure::Violation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_VIOLATION)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_RESOURCE)
        }
    }
}
