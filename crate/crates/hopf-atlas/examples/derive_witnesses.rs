//! Regenerates the frozen witness file by grid search.
//!
//!     cargo run --release --example derive_witnesses           # print
//!     cargo run --release --example derive_witnesses -- --write

use hopf_atlas::atlas::build_named;
use hopf_atlas::atlas::witnesses::{k8_change_of_basis, WITNESS_PAIRS};
use hopf_atlas::format::witnesses_to_string;
use hopf_atlas::iso::{search_iso, verify_iso, SearchOptions, SearchOutcome};

fn derive() -> String {
    let mut out = Vec::new();
    for (a, b) in WITNESS_PAIRS {
        let (h, k) = (build_named(a).unwrap(), build_named(b).unwrap());
        match search_iso(&h, &k, &SearchOptions::default()) {
            SearchOutcome::Found { witness, examined } => {
                eprintln!("{a} ≅ {b}: found after {examined} candidates");
                out.push(witness);
            }
            other => panic!("{a} ≅ {b}: {other:?}"),
        }
    }
    // 𝒦's generators are not skew-primitive, so its witness is hand-made
    let w = k8_change_of_basis();
    let rep = verify_iso(&build_named("k8").unwrap(), &build_named("dual:a4pp").unwrap(), &w);
    assert!(rep.ok, "{rep}");
    out.push(w);
    witnesses_to_string(&out)
}

fn run_example() {
    let text = derive();
    if std::env::args().any(|a| a == "--write") {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/witnesses.json");
        std::fs::write(path, &text).expect("write witness file");
        eprintln!("wrote {path}");
    } else {
        print!("{text}");
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
