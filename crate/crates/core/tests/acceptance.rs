//! Acceptance suite: prints one line per criterion and fails if any does.

use std::process::ExitCode;
use std::time::Instant;

use equichar::verify::run_all;

fn main() -> ExitCode {
    let start = Instant::now();
    let outcomes = run_all();
    for outcome in &outcomes {
        println!("{outcome}");
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!(
        "acceptance: {passed}/{} criteria passed in {:.1?}",
        outcomes.len(),
        start.elapsed()
    );
    if passed == outcomes.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
