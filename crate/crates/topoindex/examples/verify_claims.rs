//! Run the whole claim suite and print one line per claim.
//!
//! ```text
//! cargo run --release --example verify_claims
//! ```
//!
//! Pass `--quick` for the reduced corpora, `--seed N` to reseed the random
//! lanes. The exit code is nonzero when a gated claim records a violation;
//! report-only claims never fail the run.

use topoindex::harness::{run_suite, SuiteConfig};

fn main() {
    let mut config = SuiteConfig::default();
    let mut args = std::env::args().skip(1);
    while let Some(arg) = args.next() {
        match arg.as_str() {
            "--quick" => config.quick = true,
            "--seed" => {
                let v = args.next().expect("--seed takes a value");
                config.seed = v.parse().expect("seed must be an integer");
            }
            other => {
                eprintln!("unknown argument {other:?}");
                std::process::exit(1);
            }
        }
    }

    let report = run_suite(&config).expect("default config names only registered claims");
    for claim in &report.claims {
        let flag = if claim.failed {
            "FAIL"
        } else if claim.violations_total > 0 {
            "report"
        } else {
            "pass"
        };
        println!(
            "{:>4}  {:<32} {:<12} {:>6}  corpus {:>6}  violations {:>4}  advisories {:>3}  witnesses {:>3}",
            claim.id,
            claim.name,
            claim.status,
            flag,
            claim.corpus_size,
            claim.violations_total,
            claim.advisories_total,
            claim.witnesses_total,
        );
    }
    println!(
        "\nseed {}  quick {}  claims {}  gated failures {}",
        report.seed,
        report.quick,
        report.claims.len(),
        report.failed_claims.len()
    );
    if !report.passed {
        std::process::exit(2);
    }
}
