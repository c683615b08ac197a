use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use frab::cli::{run, Cli, ERROR_EXIT};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut io::stdin().lock(), &mut out) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(e) => {
            let _ = out.flush();
            eprintln!("frab: {e}");
            ExitCode::from(ERROR_EXIT)
        }
    }
}
