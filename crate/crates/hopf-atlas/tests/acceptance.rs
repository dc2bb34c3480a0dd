// One pass/fail line per acceptance criterion; exits nonzero if any fails.

use hopf_atlas::suite::{run_all, DEFAULT_SEED};

fn main() {
    let seed = std::env::var("HOPFATLAS_SEED").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_SEED);
    let results = run_all(seed);
    assert_eq!(results.len(), 12);
    for r in &results {
        println!("{}", r.line());
    }
    let failed: Vec<_> = results.iter().filter(|r| !r.passed).collect();
    for r in &failed {
        for d in r.details.iter().filter(|d| d.starts_with("FAIL")) {
            println!("  criterion {}: {d}", r.id);
        }
    }
    println!("acceptance: {}/{} criteria passed", results.len() - failed.len(), results.len());
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
