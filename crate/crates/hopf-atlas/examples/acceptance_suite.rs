// Runs a single acceptance criterion (default 3); `all` runs the battery.
//
//     cargo run --release --example acceptance_suite -- all

use hopf_atlas::suite::{run_all, run_criterion, DEFAULT_SEED};

fn run_example() {
    match std::env::args().nth(1).as_deref() {
        Some("all") => {
            for r in run_all(DEFAULT_SEED) {
                println!("{}", r.line());
            }
        }
        arg => {
            let id = arg.and_then(|s| s.parse().ok()).unwrap_or(3);
            let r = run_criterion(id, DEFAULT_SEED);
            println!("{}", r.line());
            for d in &r.details {
                println!("  {d}");
            }
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
