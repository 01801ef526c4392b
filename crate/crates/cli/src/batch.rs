//! Line-oriented batch mode: one JSON problem in, one JSON result out.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use qsylv_core::{parse_quaternion, solve, Quaternion, SylvesterProblem, Tolerance};

use crate::report::SolveReport;

/// A quaternion given either as a literal (`"1-2i"`) or as `{"w":..,"x":..,"y":..,"z":..}`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum QuatInput {
    Text(String),
    Object(Quaternion),
}

impl QuatInput {
    fn resolve(self) -> Result<Quaternion, String> {
        match self {
            QuatInput::Text(s) => parse_quaternion(&s).map_err(|e| e.to_string()),
            QuatInput::Object(q) => Ok(q),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemLine {
    a: QuatInput,
    b: QuatInput,
    #[serde(default)]
    c: Option<QuatInput>,
    #[serde(default)]
    q: Option<QuatInput>,
}

#[derive(Debug, Serialize)]
struct ErrorLine {
    line: usize,
    error: String,
}

enum LineError {
    Malformed(String),
    Domain(String),
}

fn process(line: &str, oracle: bool, tol: Tolerance) -> Result<SolveReport, LineError> {
    let raw: ProblemLine = serde_json::from_str(line).map_err(|e| LineError::Malformed(e.to_string()))?;
    let a = raw.a.resolve().map_err(LineError::Malformed)?;
    let b = raw.b.resolve().map_err(LineError::Malformed)?;
    let c = match raw.c {
        Some(c) => c.resolve().map_err(LineError::Malformed)?,
        None => Quaternion::ZERO,
    };
    let q = raw.q.map(QuatInput::resolve).transpose().map_err(LineError::Malformed)?;
    let problem = SylvesterProblem::new(a, b, c);
    let set = solve(problem, tol).map_err(|e| LineError::Domain(e.to_string()))?;
    Ok(SolveReport::build(&problem, &set, q, oracle, tol))
}

/// Returns the process exit code: 0 when every line was handled, 2 when
/// any line was malformed, 1 when any line hit a domain error.
pub fn run_batch(input: impl BufRead, out: &mut impl Write, oracle: bool, tol: Tolerance) -> std::io::Result<i32> {
    let mut code = 0;
    for (n, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rendered = match process(&line, oracle, tol) {
            Ok(report) => serde_json::to_string(&report),
            Err(err) => {
                let (msg, c) = match err {
                    LineError::Malformed(m) => (m, 2),
                    LineError::Domain(m) => (m, 1),
                };
                code = code.max(c);
                serde_json::to_string(&ErrorLine { line: n + 1, error: msg })
            }
        }
        .map_err(std::io::Error::other)?;
        writeln!(out, "{rendered}")?;
    }
    Ok(code)
}
