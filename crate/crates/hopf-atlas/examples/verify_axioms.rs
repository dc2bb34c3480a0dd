// Checks every Hopf axiom exactly on each family in the atlas.
//
//     cargo run --example verify_axioms

use hopf_atlas::atlas::{atlas_families, build};
use hopf_atlas::hopf::verify_hopf;

fn run_example() {
    for spec in atlas_families() {
        let h = build(&spec).expect("family builds");
        let rep = verify_hopf(&h).expect("shapes agree");
        println!("{:>14}  dim {:>2} over Q(ζ{})  {rep}", spec.name(), h.dim, h.field.order());
        assert!(rep.ok());
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
