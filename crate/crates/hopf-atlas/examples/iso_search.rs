// Grid search for an isomorphism, and the invariants that rule one out.

use hopf_atlas::atlas::build_named;
use hopf_atlas::format::witness_to_string;
use hopf_atlas::hopf::hopf_dual;
use hopf_atlas::iso::{distinguish, search_iso, SearchOptions, SearchOutcome};

fn run_example() {
    let taft = build_named("taft3").unwrap();
    match search_iso(&taft, &hopf_dual(&taft), &SearchOptions::default()) {
        SearchOutcome::Found { witness, examined } => {
            println!("taft3 ≅ dual(taft3) after {examined} candidates");
            print!("{}", witness_to_string(&witness));
        }
        other => panic!("{other:?}"),
    }
    let (a, b) = (build_named("a4p").unwrap(), build_named("a4pp").unwrap());
    for reason in distinguish(&a, &b) {
        println!("a4p ≇ a4pp: {reason}");
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
