//! Command-line front end: argument handling, dispatch and rendering.

pub mod args;
pub mod batch;
pub mod report;

use std::io::{BufRead, Write};

use serde::Serialize;

use qsylv_core::{
    classify, is_similar, similarity_witness, solve, sqrt, sqrt_product, Error, SolutionSet,
    SylvesterProblem, Tolerance,
};

pub use args::{Cli, Command};
use report::{human, RootsReport, SolveReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

fn emit_json(out: &mut impl Write, value: &impl Serialize) -> std::io::Result<()> {
    let s = serde_json::to_string_pretty(value).map_err(std::io::Error::other)?;
    writeln!(out, "{s}")
}

/// Executes one parsed invocation and returns its exit code.
pub fn run(
    cli: &Cli,
    stdin: impl BufRead,
    out: &mut impl Write,
    err: &mut impl Write,
) -> std::io::Result<i32> {
    let tol = match Tolerance::new(cli.tol_rel, cli.tol_abs) {
        Ok(t) => t,
        Err(e) => {
            writeln!(err, "error: {e}")?;
            return Ok(EXIT_USAGE);
        }
    };
    match dispatch(cli, tol, stdin, out) {
        Ok(code) => Ok(code),
        Err(Failure::Io(e)) => Err(e),
        Err(Failure::Domain(e)) => {
            writeln!(err, "error: {e}")?;
            Ok(EXIT_DOMAIN)
        }
    }
}

enum Failure {
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn dispatch(cli: &Cli, tol: Tolerance, stdin: impl BufRead, out: &mut impl Write) -> Result<i32, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Sqrt { q } => {
            let report = RootsReport::from(sqrt(*q, tol)?);
            if json {
                emit_json(out, &report)?;
            } else {
                write!(out, "{}", report.text())?;
            }
        }
        Command::RootsOfProduct(pair) => {
            let report = RootsReport::from(sqrt_product(pair.a, pair.b, tol)?);
            if json {
                emit_json(out, &report)?;
            } else {
                write!(out, "{}", report.text())?;
            }
        }
        Command::Classify(pair) => {
            let class = classify(pair.a, pair.b, tol);
            if json {
                emit_json(out, &serde_json::json!({ "classification": class }))?;
            } else {
                writeln!(out, "{class:?}")?;
            }
        }
        Command::Similar(pair) => {
            let similar = is_similar(pair.a, pair.b, tol)?;
            if json {
                emit_json(out, &serde_json::json!({ "similar": similar }))?;
            } else {
                writeln!(out, "{similar}")?;
            }
        }
        Command::Witness(pair) => {
            let p = similarity_witness(pair.a, pair.b, tol)?;
            if json {
                emit_json(out, &serde_json::json!({ "witness": p }))?;
            } else {
                writeln!(out, "{}", human(p))?;
            }
        }
        Command::Solve(args) => {
            let problem = SylvesterProblem::new(args.a, args.b, args.c);
            let set = solve(problem, tol)?;
            let report = SolveReport::build(&problem, &set, args.q, args.oracle, tol);
            if json {
                emit_json(out, &report)?;
            } else {
                write!(out, "{}", report.text())?;
            }
            if set == SolutionSet::Empty || report.oracle_agrees == Some(false) {
                return Ok(EXIT_DOMAIN);
            }
        }
        Command::Batch { oracle } => {
            return Ok(batch::run_batch(stdin, out, *oracle, tol)?);
        }
    }
    Ok(EXIT_OK)
}
