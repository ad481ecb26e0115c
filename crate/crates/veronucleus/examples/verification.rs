//! Driving the verification suites from code: scoped runs, the case log,
//! and the fault-injection self-test of the harness.
//!
//! Run with: cargo run --release --example verification

use veronucleus::verify::{run, Suite, VerifyOptions};

fn main() {
    println!("=== scoped run: curve suite up to n = 6 ===\n");
    let opts = VerifyOptions {
        only: Some(Suite::Nrc),
        ..VerifyOptions::default()
    }
    .with_n_max(6);
    let report = run(&opts);
    for case in &report.cases {
        println!(
            "{} {}::{} [{}]",
            if case.pass { "ok  " } else { "FAIL" },
            case.suite,
            case.name,
            case.instance
        );
    }
    println!("\n{}", report.summary());

    println!("=== fault injection: the harness must catch a flipped constant ===\n");
    let opts = VerifyOptions {
        only: Some(Suite::Nrc),
        inject_fault: true,
        ..VerifyOptions::default()
    }
    .with_n_max(4);
    let report = run(&opts);
    assert!(!report.ok());
    print!("{}", report.summary());
}
