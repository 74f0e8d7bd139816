//! Command-line front end: argument handling, rendering and the oracle
//! cross-check.

pub mod commands;
pub mod degrees;
mod error;
pub mod json;
pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, ValueEnum};

pub use commands::{Command, Reading};
pub use error::CliError;
use render::Style;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Latex,
    Json,
}

/// Poincaré series of invariants and covariants of binary forms.
#[derive(Debug, Parser)]
#[command(name = "poincare", version)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Degrees of the forms (Jordan block sizes minus one for `kernel`).
    #[arg(required = true, allow_negative_numbers = true)]
    pub degrees: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    /// Print the expansion up to this total degree instead of the closed form.
    #[arg(long, value_name = "N")]
    pub series: Option<u32>,
    /// Compare the expansion with direct dimension counts up to this degree.
    #[arg(long, value_name = "M")]
    pub check: Option<u32>,
    #[arg(long, value_enum, default_value_t = Reading::Repaired)]
    pub variant: Reading,
}

/// Runs the parsed command, writing the result to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let d = degrees::parse_degrees(&cli.degrees)?;
    let f = commands::compute(cli.command, &d, cli.variant)?;
    if let Some(m) = cli.check {
        commands::check(cli.command, &d, &f, m)?;
        writeln!(err, "check passed to order {m}")?;
    }
    let text = match (cli.series, cli.format) {
        (Some(n), Format::Json) => {
            json::series_to_string(&commands::expand(cli.command, &f, n)?, n)
        }
        (Some(n), Format::Plain) => {
            render::series(&commands::expand(cli.command, &f, n)?, Style::Plain)
        }
        (Some(n), Format::Latex) => {
            render::series(&commands::expand(cli.command, &f, n)?, Style::Latex)
        }
        (None, Format::Json) => json::to_string(&f),
        (None, Format::Plain) => render::rational_function(&f, Style::Plain),
        (None, Format::Latex) => render::rational_function(&f, Style::Latex),
    };
    writeln!(out, "{text}")?;
    Ok(())
}

/// Parses `args` (including the program name) and runs; returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return e.exit_code();
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
