//! Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
//! any criterion fails.

use std::process::ExitCode;

use sepdeform_core::suite::{run_all, SuiteOptions};

fn main() -> ExitCode {
    let outcomes = run_all(&SuiteOptions::default());
    let mut failed = 0;
    for o in &outcomes {
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        println!("{verdict} criterion {:>2}: {} ({} ms, limit {} ms)", o.id, o.title, o.elapsed_ms, o.limit_ms);
        if !o.passed {
            failed += 1;
            if !o.within_time {
                println!("    over the time limit");
            }
            for c in o.failed_checks() {
                println!("    failed: {} {}", c.name, c.detail);
            }
        }
    }
    println!("{} of {} criteria passed", outcomes.len() - failed, outcomes.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
