//! Runs every acceptance criterion with the default trial policy and prints
//! one line per criterion. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use balrig_core::acceptance::CRITERIA;
use balrig_core::exactla::TrialPolicy;

fn main() -> ExitCode {
    let policy = TrialPolicy::default();
    println!("acceptance: {} criteria, {} trials, p = {}", CRITERIA.len(), policy.trials, policy.field.modulus());
    let mut failed = Vec::new();
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = c.run(&policy);
        println!("{outcome} ({:.2?})", start.elapsed());
        if !outcome.passed {
            failed.push(outcome.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
