use std::process::ExitCode;

use nakayama_qhs::verify::{verify, CRITERIA};

/// Largest size bound used by any criterion.
const FULL_BOUND: usize = 10;

fn main() -> ExitCode {
    let jobs = std::env::var("ACCEPTANCE_JOBS")
        .ok()
        .and_then(|j| j.parse().ok())
        .unwrap_or(0);
    println!("running {} acceptance criteria", CRITERIA.len());
    let reports = verify(FULL_BOUND, jobs, &[], |r| println!("{r}"));
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        reports.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
