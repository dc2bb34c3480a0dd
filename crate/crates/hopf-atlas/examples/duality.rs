// H* is again a Hopf algebra and H** recovers H on the nose.

use hopf_atlas::atlas::build_named;
use hopf_atlas::format::algebra_to_string;
use hopf_atlas::hopf::{hopf_dual, verify_hopf};

fn run_example() {
    for name in ["taft3", "a4pp", "am11:3"] {
        let h = build_named(name).unwrap();
        let d = hopf_dual(&h);
        assert!(verify_hopf(&d).unwrap().ok());
        let dd = hopf_dual(&d);
        println!("{name}: dual verifies, double dual equal: {}", dd.same_tensors(&h));
    }
    // the serialized dual of the 2-dimensional group algebra
    print!("{}", algebra_to_string(&hopf_dual(&build_named("kC2").unwrap())));
}

#[allow(dead_code)]
fn main() {
    run_example();
}
