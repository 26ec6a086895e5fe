//! jacring: exact computations in graded Jacobian rings.
//!
//! Every command prints one JSON report to stdout (family-scan can print
//! CSV instead) and logs to stderr. Exit codes: 0 success, 1 mathematical
//! refusal (e.g. a singular input where smoothness is required), 2 bad
//! input.

mod args;
mod run;

use clap::Parser;

fn main() {
    let cli = args::Cli::parse();
    std::process::exit(run::run(cli.command));
}
