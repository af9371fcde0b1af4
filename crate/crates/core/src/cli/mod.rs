//! Command-line front end. Exit codes: 0 success, 10 an obstruction fires,
//! 20 usage or I/O, 21 parse, 22 version, 23 verification, 24 invalid
//! input, 30 resource bound.

mod args;
mod commands;
mod dgafile;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

pub use args::Cli;
pub use dgafile::{
    load_dga, save_dga, verify, DgaFile, DgaFileError, DifferentialRecord, Provenance, TermRecord,
    DGA_FORMAT, DGA_VERSION,
};

use crate::algebra::AlgebraError;
use crate::catalog::CatalogError;
use crate::diagrams::DiagramError;
use crate::homology::HomologyError;
use crate::spun::SpunError;
use crate::variety::VarietyError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_OBSTRUCTION: i32 = 10;
pub const EXIT_USAGE: i32 = 20;
pub const EXIT_PARSE: i32 = 21;
pub const EXIT_VERSION: i32 = 22;
pub const EXIT_VERIFY: i32 = 23;
pub const EXIT_INVALID: i32 = 24;
pub const EXIT_RESOURCE: i32 = 30;

/// The JSON Schema every `--json` report conforms to.
pub const REPORT_SCHEMA: &str = include_str!("../../schema/report.schema.json");

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Version(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Resource(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Version(_) => EXIT_VERSION,
            CliError::Verification(_) => EXIT_VERIFY,
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Resource(_) => EXIT_RESOURCE,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse(_) => "parse",
            CliError::Version(_) => "version",
            CliError::Verification(_) => "verification",
            CliError::Invalid(_) => "invalid-input",
            CliError::Resource(_) => "resource",
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<DgaFileError> for CliError {
    fn from(e: DgaFileError) -> Self {
        let s = e.to_string();
        match e {
            DgaFileError::Format(_) => CliError::Parse(s),
            DgaFileError::Version { .. } => CliError::Version(s),
            DgaFileError::Verification(_) => CliError::Verification(s),
        }
    }
}

impl From<DiagramError> for CliError {
    fn from(e: DiagramError) -> Self {
        let s = e.to_string();
        match e {
            DiagramError::Format(_) => CliError::Parse(s),
            DiagramError::Version { .. } => CliError::Version(s),
            DiagramError::Resource { .. } => CliError::Resource(s),
            _ => CliError::Invalid(s),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Parse { .. } => CliError::Parse(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<SpunError> for CliError {
    fn from(e: SpunError) -> Self {
        match e {
            SpunError::Algebra(a) => a.into(),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<HomologyError> for CliError {
    fn from(e: HomologyError) -> Self {
        let s = e.to_string();
        match e {
            HomologyError::Resource { .. } => CliError::Resource(s),
            HomologyError::Format(_) => CliError::Parse(s),
            _ => CliError::Invalid(s),
        }
    }
}

impl From<VarietyError> for CliError {
    fn from(e: VarietyError) -> Self {
        match e {
            VarietyError::Homology(h) => h.into(),
            VarietyError::Parse(_) => CliError::Parse(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Unknown(_) => CliError::Invalid(e.to_string()),
            CatalogError::Diagram(d) => d.into(),
            CatalogError::Algebra(a) => a.into(),
            CatalogError::Spun(s) => s.into(),
        }
    }
}

/// A finished command: its text rendering, JSON payload and exit code.
pub struct Outcome {
    pub text: String,
    pub json: serde_json::Value,
    pub code: i32,
}

/// Parse `args` (including the program name), run the command and write the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let name = commands::command_name(&cli.command);
    match commands::dispatch(&cli) {
        Ok(o) => {
            let _ = if cli.json {
                writeln!(out, "{}", envelope(name, o.code, o.json))
            } else {
                write!(out, "{}", o.text)
            };
            o.code
        }
        Err(e) => {
            if cli.json {
                let payload = serde_json::json!({ "error": e.kind(), "message": e.to_string() });
                let _ = writeln!(out, "{}", envelope(name, e.code(), payload));
            }
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn envelope(command: &str, code: i32, result: serde_json::Value) -> String {
    let v = serde_json::json!({ "command": command, "exit_code": code, "result": result });
    serde_json::to_string_pretty(&v).expect("reports serialize")
}

pub fn main() -> ! {
    let code = run(
        std::env::args_os(),
        &mut std::io::stdout(),
        &mut std::io::stderr(),
    );
    std::process::exit(code)
}
