use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use schur_stieltjes::algebra::parse_field;
use schur_stieltjes::hankel::Parity;
use schur_stieltjes::report::{error_json, execute, Command, Overrides};
use schur_stieltjes::selftest::{run_selftest, SelftestOptions};
use schur_stieltjes::Error;

/// Exact Schur algorithm for truncated indefinite Stieltjes moment problems.
///
/// Input is a JSON object {"moments": ["p/q", ...], "parity", "kappa", "k",
/// "free_tail", "tau"} read from INPUT or stdin. Output is one JSON document
/// on stdout; rationals are strings and polynomials are ascending
/// coefficient lists.
#[derive(Debug, Parser)]
#[command(name = "schur-stieltjes", version)]
struct Cli {
    /// Print a human-readable summary on stderr.
    #[arg(long, global = true)]
    pretty: bool,
    /// File with one JSON problem per line; prints a JSON array in input order.
    #[arg(long, global = true, value_name = "FILE")]
    batch: Option<PathBuf>,
    /// Seed for the selftest corpus.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Value of the free moment s_{2n-1} in odd problems.
    #[arg(long, global = true, value_name = "P/Q")]
    free_tail: Option<String>,
    /// Problem parity, overriding the input.
    #[arg(long, global = true)]
    parity: Option<Parity>,
    /// Corrupt one selftest case.
    #[arg(long, global = true, hide = true)]
    inject_fault: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Normal indices, Hankel inertia, regularity and solvability.
    Analyze { input: Option<PathBuf> },
    /// Continued fraction, Stieltjes polynomials and solution matrix.
    Expand { input: Option<PathBuf> },
    /// The solution for the parameter `tau` of the input.
    Solve { input: Option<PathBuf> },
    /// Masses and lengths of the associated string.
    String { input: Option<PathBuf> },
    /// Run the seeded invariant suites.
    Selftest,
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Error> {
    let io_err = |e: io::Error| Error::Parse { field: "input".into(), message: e.to_string() };
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p).map_err(io_err),
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).map_err(io_err)?;
            Ok(text)
        }
    }
}

fn emit(value: &serde_json::Value) {
    println!("{}", serde_json::to_string(value).expect("json value serializes"));
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

fn selftest(cli: &Cli) -> ExitCode {
    let report =
        run_selftest(&SelftestOptions { seed: cli.seed, inject_fault: cli.inject_fault, ..Default::default() });
    emit(&serde_json::to_value(&report).expect("selftest report serializes"));
    if cli.pretty {
        eprintln!("{}", report.summary());
    }
    match report.first_failure() {
        None => ExitCode::SUCCESS,
        Some(f) => {
            eprintln!("counterexample: {}", f.message);
            eprintln!("{}", f.counterexample);
            code(Error::Consistency(String::new()).exit_code())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, input) = match &cli.command {
        Cmd::Analyze { input } => (Command::Analyze, input),
        Cmd::Expand { input } => (Command::Expand, input),
        Cmd::Solve { input } => (Command::Solve, input),
        Cmd::String { input } => (Command::String, input),
        Cmd::Selftest => return selftest(&cli),
    };
    let overrides = match cli.free_tail.as_deref().map(|t| parse_field("free_tail", t)).transpose() {
        Ok(free_tail) => Overrides { parity: cli.parity, free_tail },
        Err(e) => {
            emit(&error_json(&e));
            return code(e.exit_code());
        }
    };
    if let Some(path) = &cli.batch {
        let text = match read_input(Some(path)) {
            Ok(t) => t,
            Err(e) => {
                emit(&error_json(&e));
                return code(e.exit_code());
            }
        };
        let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
        let results: Vec<_> = lines.par_iter().map(|line| execute(command, line, &overrides)).collect();
        let mut first_code = 0;
        let docs: Vec<serde_json::Value> = results
            .iter()
            .enumerate()
            .map(|(i, r)| match r {
                Ok(report) => {
                    if cli.pretty {
                        eprintln!("[{i}] {}", report.summary());
                    }
                    serde_json::to_value(report).expect("report serializes")
                }
                Err(e) => {
                    if cli.pretty {
                        eprintln!("[{i}] error: {e}");
                    }
                    if first_code == 0 {
                        first_code = e.exit_code();
                    }
                    error_json(e)
                }
            })
            .collect();
        emit(&serde_json::Value::Array(docs));
        return code(first_code);
    }
    let result = read_input(input.as_ref()).and_then(|text| execute(command, &text, &overrides));
    match result {
        Ok(report) => {
            emit(&serde_json::to_value(&report).expect("report serializes"));
            if cli.pretty {
                eprintln!("{}", report.summary());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            emit(&error_json(&e));
            if cli.pretty {
                eprintln!("error: {e}");
            }
            code(e.exit_code())
        }
    }
}
