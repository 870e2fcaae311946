//! `octaspec` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure (or internal error),
//! 2 usage error. Data goes to stdout, diagnostics to stderr.

#![forbid(unsafe_code)]

pub mod commands;
pub mod fixtures;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use octaspec_core::closed_forms::ClosedForms;
use octaspec_core::graph_gen::{ChainKind, ExportFormat};
use octaspec_core::Error;

use commands::{DataFormat, SpectrumMatrix, TableKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "octaspec", version, about = "Spectral invariants of Möbius octagonal chains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit Q_n (moebius) or L_n (linear).
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "moebius")]
        kind: ChainKind,
        /// json, edgelist or dot
        #[arg(long, default_value = "json")]
        format: ExportFormat,
    },
    /// Sorted normalized-Laplacian eigenvalues with block labels.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "full")]
        matrix: SpectrumMatrix,
        #[arg(long, value_enum, default_value = "csv")]
        format: DataFormat,
    },
    /// Closed-form values for a range of n.
    Table {
        #[arg(value_enum)]
        which: TableKind,
        #[arg(long, default_value_t = 1)]
        from: u64,
        #[arg(long)]
        to: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: DataFormat,
        /// Append the published values and a match column.
        #[arg(long)]
        compare_paper: bool,
    },
    /// Check every closed form against the oracles for n = 1..=n_max.
    Verify {
        #[arg(long)]
        n_max: u64,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json_out: Option<PathBuf>,
        /// JSON object overriding closed-form constants (rationals as "p/q").
        #[arg(long)]
        constants: Option<PathBuf>,
    },
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::Usage(_) | Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_FAILURE,
    }
}

pub fn load_constants(path: &Path) -> Result<ClosedForms, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code_for(&e)
        }
    }
}

fn execute(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Error> {
    let text = match command {
        Command::Graph { n, kind, format } => commands::graph(n, kind, format)?,
        Command::Spectrum { n, matrix, format } => commands::spectrum(n, matrix, format)?,
        Command::Table { which, from, to, format, compare_paper } => {
            commands::table(which, from, to, compare_paper, format)?
        }
        Command::Verify { n_max, json_out, constants } => {
            if n_max == 0 {
                return Err(Error::Usage("--n-max must be at least 1".into()));
            }
            let cf = match &constants {
                Some(path) => load_constants(path)?,
                None => ClosedForms::default(),
            };
            let report = report::run_verify(&cf, n_max, constants.is_some());
            let json = serde_json::to_string_pretty(&report).expect("serializable") + "\n";
            for c in report.failures() {
                let _ = writeln!(
                    stderr,
                    "FAIL {} n={}: expected {} got {}{}",
                    c.name,
                    c.n,
                    c.expected,
                    c.actual,
                    c.note.as_deref().map(|s| format!(" ({s})")).unwrap_or_default()
                );
            }
            let s = report.summary;
            let _ = writeln!(
                stderr,
                "{} checks: {} passed, {} failed, {} informational",
                s.total, s.passed, s.failed, s.informational
            );
            let code = if report.ok() { EXIT_OK } else { EXIT_FAILURE };
            match json_out {
                Some(path) => {
                    std::fs::write(&path, json)
                        .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
                    return Ok(code);
                }
                None => {
                    let _ = stdout.write_all(json.as_bytes());
                    return Ok(code);
                }
            }
        }
    };
    let _ = stdout.write_all(text.as_bytes());
    Ok(EXIT_OK)
}
