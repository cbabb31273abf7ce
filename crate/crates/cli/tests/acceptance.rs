//! Prints the acceptance table and fails if any criterion fails.
//!
//! The seed for the randomized suites comes from `HURWITZ_SEED`.

use std::process::ExitCode;

use hurwitz_cli::reproduce;

fn main() -> ExitCode {
    let seed =
        std::env::var("HURWITZ_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(reproduce::DEFAULT_SEED);
    let rows = reproduce::run(seed, |row| println!("{row}"));
    if rows.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
