#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: Option<&'static str>,
    pub env: &'static [(&'static str, &'static str)],
}

const fn case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case {
        name,
        args,
        stdin: None,
        env: &[],
    }
}

pub const CASES: &[Case] = &[
    case("sqrt_pair", &["sqrt", "3+4i"]),
    case("sqrt_pair_json", &["sqrt", "3+4i", "--json"]),
    case("sqrt_unit_i", &["sqrt", "i"]),
    case("sqrt_positive_real", &["sqrt", "4"]),
    case("sqrt_pure_sphere", &["sqrt", "-9"]),
    case("sqrt_pure_sphere_json", &["--json", "sqrt", "-9"]),
    case("sqrt_zero", &["sqrt", "0"]),
    case("solve_homogeneous_json", &["solve", "--a", "i", "--b", "j", "--c", "0", "--json"]),
    case("solve_homogeneous_opposite", &["solve", "--a", "1+i", "--b", "1-i"]),
    case("solve_real_equal_homogeneous", &["solve", "--a", "2", "--b", "2"]),
    case("solve_inhomogeneous_oracle", &["solve", "--a", "i", "--b", "i", "--c", "2k", "--oracle"]),
    case("solve_inhomogeneous_q", &["solve", "--a", "1+i", "--b", "1-i", "--c", "2i", "--q", "j", "--json"]),
    case("solve_generic_singular", &["solve", "--a", "i", "--b", "j", "--c", "1+k", "--oracle"]),
    case("solve_unsolvable", &["solve", "--a", "i", "--b", "i", "--c", "1"]),
    case("solve_unsolvable_json", &["solve", "--a", "i", "--b", "i", "--c", "1", "--json", "--oracle"]),
    case("solve_real_equal", &["solve", "--a", "2", "--b", "2", "--c", "1"]),
    case("solve_real_distinct", &["solve", "--a", "2", "--b", "3", "--c", "1"]),
    case("solve_regular", &["solve", "--a", "i", "--b", "2i", "--c", "1"]),
    case("solve_regular_oracle_json", &["solve", "--a", "i", "--b", "j+10", "--c", "k", "--oracle", "--json"]),
    case("classify_singular", &["classify", "--a", "1+i", "--b", "1+j"]),
    case("classify_regular_json", &["classify", "--a", "i", "--b", "2i", "--json"]),
    case("classify_real_equal", &["classify", "--a", "2", "--b", "(2,0,0,0)"]),
    case("classify_real_distinct", &["classify", "--a", "2", "--b", "-3"]),
    case("similar_true", &["similar", "--a", "1+i", "--b", "1+j"]),
    case("similar_false_json", &["similar", "--a", "i", "--b", "2i", "--json"]),
    case("similar_real_input", &["similar", "--a", "2", "--b", "i"]),
    case("witness_generic", &["witness", "--a", "i", "--b", "j"]),
    case("witness_opposite_json", &["witness", "--a", "i", "--b", "-i", "--json"]),
    case("witness_not_similar", &["witness", "--a", "i", "--b", "2j"]),
    case("roots_of_product", &["roots-of-product", "--a", "i", "--b", "j"]),
    case("roots_of_product_json", &["roots-of-product", "--a", "i", "--b", "j", "--json"]),
    case("roots_of_product_real", &["roots-of-product", "--a", "i", "--b", "i"]),
    case("parse_error_duplicate", &["solve", "--a", "2i+3i", "--b", "j"]),
    case("parse_error_positional", &["classify", "--a", "(1,2,3)", "--b", "j"]),
    case("missing_operand", &["witness", "--a", "i"]),
    Case {
        name: "tolerance_env",
        args: &["similar", "--a", "i", "--b", "1.05i"],
        stdin: None,
        env: &[("QSYLV_TOL_REL", "0.1")],
    },
    Case {
        name: "batch",
        args: &["batch", "--oracle"],
        stdin: Some(concat!(
            "{\"a\":\"i\",\"b\":\"j\"}\n",
            "{\"a\":\"i\",\"b\":\"j\",\"c\":\"1+k\",\"q\":\"1\"}\n",
            "\n",
            "{\"a\":{\"w\":2,\"x\":0,\"y\":0,\"z\":0},\"b\":\"2\",\"c\":\"1\"}\n",
            "{\"a\":\"i\",\"b\":\"2i\",\"c\":\"1\"}\n",
        )),
        env: &[],
    },
    Case {
        name: "batch_malformed",
        args: &["batch"],
        stdin: Some("{\"a\":\"i\",\"b\":\"j\"}\nnot json\n{\"a\":\"i\",\"b\":\"1+\"}\n"),
        env: &[],
    },
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_binary(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Outcome {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qsylv"));
    cmd.args(args)
        .env_remove("QSYLV_TOL_REL")
        .env_remove("QSYLV_TOL_ABS")
        .env_remove("RUST_LOG")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn qsylv");
    // Feed stdin from another thread so a large batch cannot fill the
    // stdout pipe while we are still writing.
    let mut pipe = child.stdin.take().expect("stdin");
    let input = stdin.unwrap_or_default().to_owned();
    let writer = std::thread::spawn(move || pipe.write_all(input.as_bytes()));
    let out = child.wait_with_output().expect("wait for qsylv");
    writer.join().expect("stdin writer").expect("write stdin");
    Outcome {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub fn render(case: &Case) -> String {
    let o = run_binary(case.args, case.stdin, case.env);
    format!(
        "$ qsylv {}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        case.args.join(" "),
        o.code,
        o.stdout,
        o.stderr
    )
}

/// Compares every case with its snapshot; `QSYLV_BLESS=1` rewrites them.
pub fn check_goldens() -> Vec<(&'static str, Result<(), String>)> {
    let bless = std::env::var_os("QSYLV_BLESS").is_some();
    let dir = golden_dir();
    CASES
        .iter()
        .map(|case| {
            let actual = render(case);
            let path = dir.join(format!("{}.txt", case.name));
            if bless {
                std::fs::write(&path, &actual).expect("write golden");
                return (case.name, Ok(()));
            }
            let result = match std::fs::read_to_string(&path) {
                Ok(expected) if expected == actual => Ok(()),
                Ok(expected) => Err(format!("snapshot mismatch\n--- expected\n{expected}\n--- actual\n{actual}")),
                Err(e) => Err(format!("missing snapshot {}: {e}", path.display())),
            };
            (case.name, result)
        })
        .collect()
}
