//! `effspec`: effective spectral radius tools for matrices stored in plain
//! text files.

mod commands;
mod error;
mod format;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand};

use error::{exit, CliError};
use report::Report;

#[derive(Debug, Parser)]
#[command(
    name = "effspec",
    version,
    about = "Effective spectrum and effective spectral radius"
)]
struct Cli {
    /// Print one single-key JSON object per line.
    #[arg(long, global = true)]
    json_lines: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Effective spectral radius ρ(K·Diag(η)).
    Radius {
        file: String,
        /// Comma-separated nonnegative scaling vector; all ones by default.
        #[arg(long, allow_hyphen_values = true)]
        eta: Option<String>,
    },
    /// Eigenvalues of K·Diag(η) as `re im` pairs.
    Spectrum {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        eta: Option<String>,
    },
    /// Whether two matrices have the same effective spectral radius.
    Compare {
        first: String,
        second: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Allow entries of any sign (decisive only under diagonal-sign conditions).
        #[arg(long)]
        signed: bool,
    },
    /// All principal minors, by one-based index set.
    Minors { file: String },
    /// Maximal irreducible index sets.
    Atoms { file: String },
    /// Index sets whose off-diagonal blocks have rank at most one.
    Clans {
        file: String,
        #[arg(long, default_value_t = effspec::DEFAULT_RANK_TOL)]
        tol: f64,
    },
    /// Partial transpose over a clan; writes a matrix file.
    PartialTranspose {
        file: String,
        /// One-based comma-separated clan indices.
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value_t = effspec::DEFAULT_RANK_TOL)]
        tol: f64,
    },
    /// Diagonal d with first = Diag(d)·second·Diag(d)⁻¹.
    Diagsim {
        first: String,
        second: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Smallest radius after zeroing exactly `budget` components of η.
    Minimize {
        file: String,
        #[arg(long)]
        budget: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

enum Output {
    Report(Report),
    Text(String),
}

fn run(command: Command) -> Result<Output, CliError> {
    use commands::*;
    let report = match command {
        Command::Radius { file, eta } => radius(&load(&file)?, eta.as_deref())?,
        Command::Spectrum { file, eta } => spectrum(&load(&file)?, eta.as_deref())?,
        Command::Compare {
            first,
            second,
            tol,
            signed,
        } => compare(&load(&first)?, &load(&second)?, tol, signed)?,
        Command::Minors { file } => minors(&load(&file)?)?,
        Command::Atoms { file } => atoms_report(&load(&file)?)?,
        Command::Clans { file, tol } => clans(&load(&file)?, tol)?,
        Command::PartialTranspose { file, alpha, tol } => {
            return Ok(Output::Text(partial_transpose_text(
                &load(&file)?,
                &alpha,
                tol,
            )?));
        }
        Command::Diagsim { first, second, tol } => diagsim(&load(&first)?, &load(&second)?, tol)?,
        Command::Minimize { file, budget, tol } => minimize(&load(&file)?, budget, tol)?,
    };
    Ok(Output::Report(report))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(exit::USAGE as u8),
            };
        }
    };
    let (text, code) = match run(cli.command) {
        Ok(Output::Report(r)) => (r.render(cli.json_lines), r.exit_code),
        Ok(Output::Text(t)) => (t, 0),
        Err(e) => {
            eprintln!("effspec: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(exit::IO_ERR as u8);
    }
    ExitCode::from(code as u8)
}
