use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use qsylv_cli::{run, Cli};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let stdin = io::stdin().lock();
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let code = match run(&cli, stdin, &mut out, &mut err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            qsylv_cli::EXIT_DOMAIN
        }
    };
    let _ = out.flush();
    ExitCode::from(code as u8)
}
