//! Command-line front end: `table`, `verify` and `export-stirling`.

pub mod commands;
pub mod config;

use config::{Cli, Command, Family, RunConfig};

/// Run a parsed command line and return the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let default_family = match cli.command {
        Command::ExportStirling(_) => Family::DegStirling2,
        _ => Family::PolyEuler,
    };
    let outcome = RunConfig::resolve(cli.command.flags(), default_family).and_then(|cfg| match cli.command {
        Command::Table(_) => commands::cmd_table(&cfg),
        Command::Verify(_) => commands::cmd_verify(&cfg),
        Command::ExportStirling(_) => commands::cmd_export_stirling(&cfg),
    });
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {} {e}", cli.command.name());
            e.exit_code()
        }
    }
}
