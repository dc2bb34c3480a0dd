// Coradical numbers, (r, s) types and antipode orders of the small
// nonsemisimple algebras and their duals.

use hopf_atlas::atlas::build_named;
use hopf_atlas::hopf::hopf_dual;
use hopf_atlas::invariants::summarize;

fn run_example() {
    println!("{:<18} {:>4} {:>6} {:>3} {:>3} {:>5}  filtration", "algebra", "dim", "corad", "r", "s", "ord S");
    for name in ["h4", "taft3", "a4p", "a4pp", "a4ppp+", "a22", "k8", "am10:3", "am11:3", "h4xc:3"] {
        let h = build_named(name).unwrap();
        for h in [hopf_dual(&h), h] {
            let s = summarize(&h).unwrap();
            println!(
                "{:<18} {:>4} {:>6} {:>3} {:>3} {:>5}  {:?}",
                h.name, s.dim, s.corad_dim, s.r.to_string(), s.s.to_string(), s.antipode_order.to_string(), s.filtration.layer_dims
            );
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
