use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use gln_dual_cli::{execute, Cli, EXIT_OK, EXIT_VALIDATION};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            // clap would use 2 for usage errors, which is reserved for failed checks
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::from(EXIT_OK as u8),
                _ => ExitCode::from(EXIT_VALIDATION as u8),
            };
        }
    };

    let (code, report) = match execute(&cli.command) {
        Ok(done) => done,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(EXIT_VALIDATION as u8);
        }
    };

    let written = match cli.command.json_out() {
        Some(path) => std::fs::write(path, &report).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout()
            .lock()
            .write_all(report.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(err) = written {
        eprintln!("error: {err}");
        return ExitCode::from(EXIT_VALIDATION as u8);
    }
    ExitCode::from(code as u8)
}
