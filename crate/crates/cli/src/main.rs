//! `pz`: classification, transformation, critical points, portraits and
//! residual verification for the Polyanin-Zaitsev family.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use commands::CliError;

fn init_logging() {
    let level = match std::env::var("PZ_LOG").as_deref() {
        Ok("debug") => log::LevelFilter::Debug,
        Ok("info") => log::LevelFilter::Info,
        _ => log::LevelFilter::Off,
    };
    env_logger::Builder::new().filter_level(level).target(env_logger::Target::Stderr).init();
}

fn main() -> ExitCode {
    init_logging();
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match commands::run(cli.command, &mut stdout) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Validation(_) => ExitCode::from(2),
                CliError::Computation(_) | CliError::Io(_) => ExitCode::from(1),
            }
        }
    }
}
