//! `tri-extremal` command-line front end.
//!
//! Exit codes: 0 success, 1 internal invariant violation or oracle
//! mismatch, 2 user or input error.

mod bench;
mod run;
mod svg;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Library(#[from] tri_extremal::Error),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(tri_extremal::Error::InvariantViolation(_)) | CliError::Mismatch(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Parser)]
#[command(name = "tri-extremal", version, about = "Extremal triangles of convex polygons, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum-area triangle with corners on polygon vertices.
    MaxTriangle {
        /// Polygon file, or `-` for stdin.
        polygon: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// All 3-stable inscribed triangles.
    #[command(name = "list-3stable")]
    List3Stable(RunArgs),
    /// All generally 3-stable triangles (corners on vertices or open edges).
    #[command(name = "list-g3stable")]
    ListG3Stable(RunArgs),
    /// Minimum-area enclosing triangle, with every tied minimum.
    MinEnclosing(RunArgs),
    /// Write a random strictly convex polygon with integer coordinates.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000_000)]
        bound: i64,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compare every algorithm against its brute-force oracle on random cases.
    Verify {
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Time both enumerations over a list of sizes and report counter ratios.
    Bench {
        /// Comma-separated sizes; accepts `100000`, `10^5`, `2*10^5`, `4e5`.
        #[arg(long, value_delimiter = ',', value_parser = bench::parse_size)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Coordinate bound; picked from the largest size when omitted.
        #[arg(long)]
        bound: Option<i64>,
        /// Timed repetitions per size; the fastest is reported.
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
}

#[derive(Args)]
pub struct RunArgs {
    /// Polygon file, or `-` for stdin.
    polygon: PathBuf,
    #[arg(long)]
    json: bool,
    /// Write the sweep trace as JSON Lines.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Render the sweep as a sequence of SVG frames.
    #[arg(long)]
    svg: Option<PathBuf>,
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::MaxTriangle { polygon, json } => {
            let args = RunArgs { polygon, json, trace: None, svg: None };
            run::execute(run::Algorithm::MaxTriangle, &args)
        }
        Command::List3Stable(args) => run::execute(run::Algorithm::ThreeStable, &args),
        Command::ListG3Stable(args) => run::execute(run::Algorithm::GeneralStable, &args),
        Command::MinEnclosing(args) => run::execute(run::Algorithm::MinEnclosing, &args),
        Command::Gen { n, seed, bound, out } => {
            let poly = tri_extremal::random_convex(n, seed, bound)?;
            let text = tri_extremal::emit_polygon(&poly);
            match out {
                Some(path) => run::write_file(&path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
        Command::Verify { n_max, cases, seed } => verify::verify(n_max, cases, seed),
        Command::Bench { sizes, seed, bound, reps } => bench::bench(&sizes, seed, bound, reps),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
