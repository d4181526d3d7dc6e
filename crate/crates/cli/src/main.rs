use clap::Parser;
use polyeuler_cli::config::Cli;

fn main() {
    let cli = Cli::parse();
    std::process::exit(polyeuler_cli::run(&cli));
}
