//! `sympow`: exact symbolic-vs-ordinary power containment checks for ideals
//! of point configurations in the projective plane, with a built-in pipeline
//! reproducing the dual Hesse counterexample to the (3, 2) containment.

mod args;
mod commands;
mod report;

use clap::Parser;

fn main() -> std::process::ExitCode {
    let cli = args::Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => std::process::ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::ExitCode::from(2)
        }
    }
}
