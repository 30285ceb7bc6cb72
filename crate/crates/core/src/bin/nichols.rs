use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::Parser;
use serde_json::Value;

use nichols::approx::AlgebraTag;
use nichols::cli::{self, Command, Format, Job, EXIT_INPUT};
use nichols::fixtures;

/// Exact Nichols algebra dimensions, covers, approximations and twists.
///
/// Exit status: 0 ok, 1 negative verdict, 2 input error, 3 budget exhausted.
#[derive(Parser, Debug)]
#[command(name = "nichols", version)]
struct Args {
    /// Job file (JSON); other flags override its fields.
    #[arg(long)]
    job: Option<PathBuf>,
    /// One of: validate, yangbaxter, matsumoto, symmetrizer, nichols, cover,
    /// cover-check, quotient, shuffle, truncate, extend, approx, f2-shuffle,
    /// twist, intertwine, braiding, braid-apply, word-basis, ideal, omega.
    #[arg(long)]
    command: Option<String>,
    /// Input JSON file, or fixture:NAME.
    #[arg(long)]
    input: Option<String>,
    /// Truncation degree (default 2).
    #[arg(long)]
    d: Option<usize>,
    /// Highest degree computed (default 5).
    #[arg(long = "N")]
    n_max: Option<usize>,
    /// Strand count for symmetrizer and intertwine (default 2 and 3).
    #[arg(long)]
    n: Option<usize>,
    /// Work budget in elementary operations.
    #[arg(long)]
    budget: Option<u128>,
    /// Seed for randomly drawn twisting cocycles (default 0).
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_parser = ["json", "tsv"])]
    format: Option<String>,
    /// Algebra for truncate, extend and approx: tensor, shuffle or nichols.
    #[arg(long)]
    tag: Option<String>,
    /// Write output here (atomically) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Disable internal parallelism.
    #[arg(long)]
    serial: bool,
    /// Compute symmetrizer ranks block by block.
    #[arg(long)]
    blocked: bool,
    /// Print the built-in fixtures and exit.
    #[arg(long)]
    list_fixtures: bool,
}

fn flags_job(a: &Args) -> nichols::Result<Job> {
    Ok(Job {
        command: a.command.as_deref().map(str::parse::<Command>).transpose()?,
        input: a.input.clone().map(Value::String),
        d: a.d,
        n_max: a.n_max,
        n: a.n,
        budget: a.budget,
        seed: a.seed,
        format: a.format.as_deref().map(str::parse::<Format>).transpose()?,
        tag: a.tag.as_deref().map(str::parse::<AlgebraTag>).transpose()?,
        parallel: a.serial.then_some(false),
        blocked: a.blocked.then_some(true),
    })
}

fn build(a: &Args) -> nichols::Result<(Job, PathBuf)> {
    let flags = flags_job(a)?;
    match &a.job {
        Some(path) => {
            let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
            // Inputs given on the command line stay relative to the working directory.
            let mut flags = flags;
            if let Some(Value::String(s)) = &flags.input {
                if !s.starts_with("fixture:") {
                    let abs = std::env::current_dir()?.join(s);
                    flags.input = Some(Value::String(abs.to_string_lossy().into_owned()));
                }
            }
            Ok((Job::from_file(path)?.overlay(flags), base))
        }
        None => Ok((flags, PathBuf::from("."))),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list_fixtures {
        for f in fixtures::all_fixtures() {
            println!("{}\t{}", f.name, f.description);
        }
        return ExitCode::SUCCESS;
    }
    let outcome = match build(&args) {
        Ok((job, base)) => cli::run(&job, &base),
        Err(e) => cli::Outcome { code: EXIT_INPUT, output: format!("{}\n", cli::error_json(&e)) },
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = cli::write_atomically(path, &outcome.output) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT as u8);
            }
        }
        None => print!("{}", outcome.output),
    }
    ExitCode::from(outcome.code as u8)
}
