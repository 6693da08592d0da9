//! Runs every acceptance criterion and prints one line per criterion.
//! Exits with a failure status if any criterion fails.

use latpath::checks::run_acceptance;
use std::process::ExitCode;
use std::time::Instant;

fn main() -> ExitCode {
    let start = Instant::now();
    let outcomes = run_acceptance();
    for o in &outcomes {
        println!("{}", o);
    }
    let passed = outcomes.iter().filter(|o| o.ok()).count();
    println!("{} of {} criteria passed in {:.1}s", passed, outcomes.len(), start.elapsed().as_secs_f64());
    if passed == outcomes.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
