//! Command-line front end. Every file argument accepts `-` for standard
//! input.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use thiserror::Error;

use crate::error::Error;
use crate::frab::Frab;
use crate::tabulation::{reconstruct, tabulate, TokenStream};
use crate::text::{parse_frab_text, render_frab_text};

#[derive(Debug, Parser)]
#[command(name = "frab", version, about = "Formal sums of string symbols")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count whitespace-separated tokens into a frab file
    Tabulate { tokens: PathBuf },
    /// Sum of all inputs
    Add {
        #[arg(num_args = 2.., required = true)]
        files: Vec<PathBuf>,
    },
    /// Difference of two inputs
    Sub { lhs: PathBuf, rhs: PathBuf },
    /// Multiply every coefficient by a factor
    Scale {
        #[arg(allow_negative_numbers = true)]
        factor: f64,
        file: PathBuf,
    },
    /// Drop entries whose magnitude is at most the tolerance
    Zap {
        #[arg(long, allow_hyphen_values = true)]
        tol: f64,
        file: PathBuf,
    },
    /// Tabular display
    Show { file: PathBuf },
    /// Exit 0 if the inputs are equal, 1 otherwise
    Eq { lhs: PathBuf, rhs: PathBuf },
    /// Expand a count table back into tokens, one per line
    Reconstruct { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Unequal,
}

impl Outcome {
    pub fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Unequal => 1,
        }
    }
}

/// Exit status for errors.
pub const ERROR_EXIT: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Input { path: String, source: Error },
    #[error("{0}")]
    Frab(#[from] Error),
    #[error("writing output: {0}")]
    Output(#[source] io::Error),
}

fn display_path(path: &Path) -> String {
    if path == Path::new("-") {
        "<stdin>".to_string()
    } else {
        path.display().to_string()
    }
}

fn read_input(path: &Path, stdin: &mut dyn Read) -> Result<String, CliError> {
    let io_err = |source| CliError::Io {
        path: display_path(path),
        source,
    };
    if path == Path::new("-") {
        let mut buf = String::new();
        stdin.read_to_string(&mut buf).map_err(io_err)?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn read_frab(path: &Path, stdin: &mut dyn Read) -> Result<Frab, CliError> {
    let text = read_input(path, stdin)?;
    parse_frab_text(&text).map_err(|source| CliError::Input {
        path: display_path(path),
        source,
    })
}

pub fn run(cli: Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Result<Outcome, CliError> {
    let output = match cli.command {
        Command::Tabulate { tokens } => {
            let text = read_input(&tokens, stdin)?;
            render_frab_text(&tabulate(&TokenStream::parse(&text)))
        }
        Command::Add { files } => {
            let mut total = Frab::new();
            for path in &files {
                total = total.try_add(&read_frab(path, stdin)?)?;
            }
            render_frab_text(&total)
        }
        Command::Sub { lhs, rhs } => {
            let a = read_frab(&lhs, stdin)?;
            let b = read_frab(&rhs, stdin)?;
            render_frab_text(&a.try_subtract(&b)?)
        }
        Command::Scale { factor, file } => {
            render_frab_text(&read_frab(&file, stdin)?.scalar_multiply(factor)?)
        }
        Command::Zap { tol, file } => render_frab_text(&read_frab(&file, stdin)?.zap(tol)?),
        Command::Show { file } => read_frab(&file, stdin)?.to_string(),
        Command::Eq { lhs, rhs } => {
            let a = read_frab(&lhs, stdin)?;
            let b = read_frab(&rhs, stdin)?;
            return Ok(if a == b {
                Outcome::Success
            } else {
                Outcome::Unequal
            });
        }
        Command::Reconstruct { file } => {
            let f = read_frab(&file, stdin)?;
            reconstruct(&f)
                .map_err(|source| CliError::Input {
                    path: display_path(&file),
                    source,
                })?
                .to_string()
        }
    };
    out.write_all(output.as_bytes()).map_err(CliError::Output)?;
    out.flush().map_err(CliError::Output)?;
    Ok(Outcome::Success)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], stdin: &str) -> (Result<Outcome, CliError>, String) {
        let cli = Cli::try_parse_from(std::iter::once("frab").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let r = run(cli, &mut stdin.as_bytes(), &mut out);
        (r, String::from_utf8(out).unwrap())
    }

    #[test]
    fn tabulate_from_stdin() {
        let (r, out) = run_args(&["tabulate", "-"], "a a b c d d a\n");
        assert_eq!(r.unwrap(), Outcome::Success);
        assert_eq!(out, "a\t3\nb\t1\nc\t1\nd\t2\n");
    }

    #[test]
    fn scale_accepts_negative_factor() {
        let (r, out) = run_args(&["scale", "-2", "-"], "x\t1\ny\t-3\n");
        r.unwrap();
        assert_eq!(out, "x\t-2\ny\t6\n");
    }

    #[test]
    fn zap_rejects_negative_tolerance() {
        let (r, _) = run_args(&["zap", "--tol", "-1", "-"], "x\t1\n");
        assert!(matches!(
            r,
            Err(CliError::Frab(Error::NegativeTolerance(_)))
        ));
    }

    #[test]
    fn reconstruct_reports_negative_entry() {
        let (r, _) = run_args(&["reconstruct", "-"], "a\t-1\n");
        let msg = r.unwrap_err().to_string();
        assert!(msg.contains("negative"), "{msg}");
    }

    #[test]
    fn show_uses_tabular_display() {
        let (r, out) = run_args(&["show", "-"], "z\t2\ny\t7\nx\t1\n");
        r.unwrap();
        assert_eq!(out, "A frab object with entries\nx y z \n1 7 2 \n");
    }

    #[test]
    fn add_needs_two_files() {
        assert!(Cli::try_parse_from(["frab", "add", "a"]).is_err());
    }
}
