mod args;
mod report;
mod run;

use std::panic;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use equikoszul::input::parse_input;
use equikoszul::{BigRational, Error};

use args::{Cli, Command, Format};
use run::{run, Job};

const THREADS_VAR: &str = "EQUIKOSZUL_THREADS";

fn exit_code(error: &Error) -> u8 {
    match error {
        Error::Domain { .. } | Error::UnsupportedRange { .. } => 3,
        Error::InternalConsistency(_) => 1,
        _ => 2,
    }
}

fn report_error(error: &Error) {
    match error {
        Error::InvalidTable(violations) => {
            eprintln!("error: character table failed validation:");
            for v in violations {
                eprintln!("  - {v}");
            }
        }
        Error::InvalidCover(violations) => {
            eprintln!("error: cover data failed validation:");
            for v in violations {
                eprintln!("  - {v}");
            }
        }
        other => eprintln!("error: {other}"),
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_VAR} = `{value}` is not a positive integer"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn execute(cli: Cli) -> ExitCode {
    if cli.command == Command::Koszul && cli.p.is_none() {
        Cli::command()
            .error(
                ErrorKind::MissingRequiredArgument,
                "koszul requires --p N or --p A..B",
            )
            .exit();
    }
    if let Err(message) = configure_threads() {
        eprintln!("error: {message}");
        return ExitCode::from(2);
    }
    let cover = match parse_input::<BigRational>(&cli.input) {
        Ok(cover) => cover,
        Err(e) => {
            report_error(&e);
            return ExitCode::from(exit_code(&e));
        }
    };
    let job = Job {
        command: cli.command,
        input: cli.input.display().to_string(),
        cover: &cover,
        p: cli.p,
        m: cli.m,
    };
    match run(&job) {
        Ok(report) => {
            match cli.format {
                Format::Json => print!("{}", report.to_json()),
                Format::Table => {
                    for w in &report.warnings {
                        eprintln!("warning: {w}");
                    }
                    print!("{}", report.to_table());
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            report_error(&e);
            ExitCode::from(exit_code(&e))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match panic::catch_unwind(|| execute(cli)) {
        Ok(code) => code,
        Err(_) => ExitCode::from(1),
    }
}
