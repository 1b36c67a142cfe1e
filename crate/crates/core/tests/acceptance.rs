//! Acceptance criteria at full size: one line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use sliceworks::testkit::{run_acceptance, OracleConfig, SuiteReport};

const TITLES: [&str; 10] = [
    "representation formula",
    "symmetrization realness",
    "real-point identities",
    "zero inclusion",
    "sphere propagation",
    "canonical roots",
    "*-algebra",
    "stem holomorphy",
    "domain geometry",
    "determinism",
];

fn summary(report: &SuiteReport, criterion: u8) -> String {
    report
        .properties
        .iter()
        .filter(|p| p.criterion == Some(criterion))
        .map(|p| format!("{} {}/{:.1e} (n={})", p.property, fmt(p.max_residual), p.bound, p.trials))
        .collect::<Vec<_>>()
        .join("; ")
}

fn fmt(x: f64) -> String {
    format!("{x:.2e}")
}

fn main() -> ExitCode {
    let start = Instant::now();
    let report = run_acceptance(&OracleConfig::default());
    let elapsed = start.elapsed();

    let criteria = report.criteria();
    for (c, pass) in &criteria {
        let title = TITLES[*c as usize - 1];
        println!(
            "criterion {c:>2} [{}] {title}: {}",
            if *pass { "PASS" } else { "FAIL" },
            summary(&report, *c)
        );
    }
    let budget = Duration::from_secs(60);
    let in_time = elapsed < budget;
    println!(
        "suite wall time {:.2}s (two runs, budget {}s) [{}]",
        elapsed.as_secs_f64(),
        budget.as_secs(),
        if in_time { "PASS" } else { "FAIL" }
    );
    for p in report.properties.iter().filter(|p| p.criterion.is_none()) {
        println!("extra [{}] {}: {}/{:.1e} (n={})", if p.pass { "PASS" } else { "FAIL" }, p.property, fmt(p.max_residual), p.bound, p.trials);
    }
    for p in report.properties.iter().filter(|p| !p.pass) {
        println!("failure: {p:?}");
    }

    // The first criterion alone, on a fresh run.
    let start = Instant::now();
    let single = sliceworks::testkit::run_property_suite(&OracleConfig::default());
    let first = single.property("representation_formula").is_some_and(|p| p.pass && p.trials == 1000);
    println!("criterion  1 timing: full suite in {:.2}s", start.elapsed().as_secs_f64());
    let first_in_time = start.elapsed() < Duration::from_secs(5);

    if criteria.len() == 10 && report.pass && in_time && first && first_in_time {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
