//! Library surface behind the `rangescore` binary: argument types, label
//! file handling, configuration resolution, report structures, and the
//! command implementations.

pub mod args;
pub mod config;
pub mod error;
pub mod labels;
pub mod report;
pub mod run;

pub use error::CliError;

pub fn run(cli: args::Cli) -> Result<(), CliError> {
    match &cli.command {
        args::Command::Evaluate(a) => run::run_evaluate(a),
        args::Command::Synth(c) => run::run_synth(c),
    }
}
