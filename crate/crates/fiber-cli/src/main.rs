//! Command-line front end for batch verification of stable fiber data.
//!
//! Exit codes: 0 when every selected check passes or is merely reported,
//! 1 when any check fails, 2 for usage, configuration, or construction
//! errors.

use std::process::ExitCode;

use fiber_cli::{config, emit, runner};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let config = match config::parse_args(&args) {
        Ok(config::ParseOutcome::Run(config)) => config,
        Ok(config::ParseOutcome::Help(text)) => {
            println!("{text}");
            return ExitCode::from(0);
        }
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    let (document, timings) = match runner::run(&config) {
        Ok(result) => result,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    let rendered = match emit::render(&document, &timings, config.format) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    };
    match &config.out {
        Some(path) => {
            if let Err(err) = std::fs::write(path, rendered.as_bytes()) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{rendered}"),
    }
    if document.has_fail() {
        ExitCode::from(1)
    } else {
        ExitCode::from(0)
    }
}
