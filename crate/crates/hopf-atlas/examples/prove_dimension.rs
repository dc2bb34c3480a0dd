// Eliminates grouplike orders for a dimension and replays the trace.
//
//     cargo run --example prove_dimension -- 66

use hopf_atlas::prover::trace::{replay, to_json};
use hopf_atlas::prover::{prove, Assumptions, Axiom, Flag, Pack, Verdict};

fn run_example() {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(70);
    let base = prove(n, &Assumptions::default(), Pack::Base).unwrap();
    println!("base pack:\n{}", base.summary());
    let a = Assumptions::default().with_flags(&[Flag::FullOrbit(2), Flag::FreeTranslation]).with_axiom(Axiom::PqHalf);
    let ext = match prove(n, &a, Pack::Extended) {
        Ok(r) => r,
        // full-orbit=2 needs a 2-dimensional class to exist
        Err(_) => prove(n, &Assumptions::default().with_axiom(Axiom::PqHalf), Pack::Extended).unwrap(),
    };
    println!("extended pack:\n{}", ext.summary());
    for g in ext.surviving() {
        let r = ext.result(g).unwrap();
        println!("  g={g}: {} feasible profile(s)", r.profiles.iter().filter(|p| matches!(p.verdict, Verdict::Feasible { .. })).count());
    }
    let json = to_json(&ext);
    assert_eq!(to_json(&replay(&json).unwrap()), json);
    println!("trace of {} bytes replays", json.len());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
