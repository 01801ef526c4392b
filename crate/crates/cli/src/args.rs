use clap::{Args, Parser, Subcommand};

use qsylv_core::{parse_quaternion, Quaternion, Tolerance};

#[derive(Debug, Parser)]
#[command(
    name = "qsylv",
    version,
    about = "Quaternion square roots, similarity and closed-form Sylvester solutions (a x - x b = c)"
)]
pub struct Cli {
    /// Relative comparison threshold.
    #[arg(long, global = true, env = "QSYLV_TOL_REL", default_value_t = Tolerance::DEFAULT.rel)]
    pub tol_rel: f64,

    /// Absolute comparison floor.
    #[arg(long, global = true, env = "QSYLV_TOL_ABS", default_value_t = Tolerance::DEFAULT.abs)]
    pub tol_abs: f64,

    /// Emit JSON with full round-trip precision instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Square roots of a quaternion.
    Sqrt {
        #[arg(value_parser = quaternion_arg, allow_hyphen_values = true)]
        q: Quaternion,
    },
    /// Solve a x - x b = c.
    Solve(SolveArgs),
    /// Classify the coefficient pair (a, b).
    Classify(PairArgs),
    /// Whether two nonreal quaternions are similar.
    Similar(PairArgs),
    /// A nonzero p with a p = p b for similar a, b.
    Witness(PairArgs),
    /// Square roots of a b for equal-norm a, b.
    RootsOfProduct(PairArgs),
    /// Read one JSON problem per line from stdin and write one JSON result per line.
    Batch {
        /// Cross-check every result against the real-embedding oracle.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    #[arg(long, value_parser = quaternion_arg, allow_hyphen_values = true)]
    pub a: Quaternion,
    #[arg(long, value_parser = quaternion_arg, allow_hyphen_values = true)]
    pub b: Quaternion,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[arg(long, value_parser = quaternion_arg, allow_hyphen_values = true)]
    pub a: Quaternion,
    #[arg(long, value_parser = quaternion_arg, allow_hyphen_values = true)]
    pub b: Quaternion,
    /// Right-hand side; zero when omitted.
    #[arg(long, value_parser = quaternion_arg, allow_hyphen_values = true, default_value = "0")]
    pub c: Quaternion,
    /// Free parameter of the general singular solution.
    #[arg(long, value_parser = quaternion_arg, allow_hyphen_values = true)]
    pub q: Option<Quaternion>,
    /// Cross-check the result against the real-embedding oracle.
    #[arg(long)]
    pub oracle: bool,
}

fn quaternion_arg(s: &str) -> Result<Quaternion, String> {
    parse_quaternion(s).map_err(|e| e.to_string())
}
