mod args;
mod commands;
mod resolve;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use args::Cli;

/// A failure reported to the user: a stable code, a message and, for parse errors, the location.
#[derive(Debug)]
pub struct CliError {
    pub code: &'static str,
    pub message: String,
    pub location: Option<(usize, usize)>,
    pub usage: bool,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: "usage", message: message.into(), location: None, usage: true }
    }

    pub fn io(path: &std::path::Path, e: std::io::Error) -> Self {
        CliError { code: "io-error", message: format!("{}: {e}", path.display()), location: None, usage: false }
    }

    fn exit_code(&self) -> ExitCode {
        ExitCode::from(if self.usage { 2 } else { 1 })
    }

    fn report(&self, json: bool) {
        if json {
            let mut v = json!({ "error": self.code, "message": self.message });
            if let Some((line, column)) = self.location {
                v["line"] = json!(line);
                v["column"] = json!(column);
            }
            eprintln!("{v}");
        } else {
            eprintln!("error: {}", self.message);
        }
    }
}

impl From<argmeter::Error> for CliError {
    fn from(e: argmeter::Error) -> Self {
        let location = match &e {
            argmeter::Error::Parse { line, column, .. } => Some((*line, *column)),
            _ => None,
        };
        CliError { code: e.code(), message: e.to_string(), location, usage: false }
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

fn main() -> ExitCode {
    let json = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) if json => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or_default();
            let err = CliError::usage(first.trim_start_matches("error: "));
            err.report(true);
            return err.exit_code();
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            err.report(json);
            err.exit_code()
        }
    }
}
