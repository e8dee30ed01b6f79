//! The `iomkit` command line.
//!
//! [`run_command`] does all the work and returns the rendered output with
//! the exit code, so tests can drive the CLI without spawning processes.
//! Exit codes: 0 when every asserted check passed, 1 when a check failed
//! (the witness is printed), 2 for usage and parse errors.

mod commands;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{error::ErrorKind, Parser, Subcommand};

/// Rendered output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Debug, Parser)]
#[command(name = "iomkit", version, about = "Workbench for finite involutive BE algebras")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Accepted for scripts; every run is deterministic already.
    #[arg(long, global = true)]
    seedless: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every axiom and report the classes the algebra belongs to.
    Classify { file: PathBuf },
    /// Run a suite of laws.
    Laws {
        file: PathBuf,
        /// be, bounded-be, involutive-be, iom, qw or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// List all filters or all deductive systems.
    Filters {
        file: PathBuf,
        /// filter or ds.
        #[arg(long, default_value = "filter")]
        kind: String,
        /// Also classify each one as maximal, strongly maximal, commutative.
        #[arg(long)]
        classify: bool,
    },
    /// The filter generated by a set of elements.
    Generate {
        file: PathBuf,
        #[arg(long)]
        elements: String,
    },
    /// The congruence induced by a deductive system.
    Congruence {
        file: PathBuf,
        #[arg(long)]
        ds: String,
        /// Show the relation for a filter that is not a deductive system.
        #[arg(long)]
        allow_filter: bool,
    },
    /// The quotient algebra X/F.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        ds: String,
        /// Write the quotient to this `.alg` file.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Compare commutativity of F with commutativity of every DS of X/F.
    Transfer {
        file: PathBuf,
        #[arg(long)]
        ds: String,
    },
    /// Verify a Bosbach state given as `name=p/q` assignments.
    State {
        file: PathBuf,
        #[arg(long)]
        values: String,
    },
    /// Search for algebras of a given size.
    Search {
        #[arg(long)]
        size: usize,
        /// Comma-separated classes: iom, qw, qw1, qw2, iom2, prel, om.
        #[arg(long, default_value = "")]
        require: String,
        #[arg(long, default_value = "")]
        forbid: String,
        #[arg(long)]
        limit: Option<usize>,
    },
}

/// A usage or input error, reported with exit code 2.
#[derive(Debug)]
pub(crate) struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Parses `argv` (including the program name) and runs the command.
///
/// ```
/// let out = iomkit_cli::run_command(["iomkit", "search", "--size", "2"]);
/// assert_eq!(out.code, 0);
/// assert!(out.stdout.contains("1 model"));
/// ```
pub fn run_command<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Output { stdout: text, stderr: String::new(), code: 0 }
                }
                _ => Output { stdout: String::new(), stderr: text, code: 2 },
            };
        }
    };
    match commands::dispatch(cli.command) {
        Ok(report) => {
            let stdout = if cli.json { report.to_json() } else { report.human.clone() };
            Output { stdout, stderr: String::new(), code: report.code }
        }
        Err(UsageError(message)) => Output { stdout: String::new(), stderr: format!("error: {message}\n"), code: 2 },
    }
}

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
mod book_cli {}
