// dim H = dim H^coπ · dim B for the shipped surjections π : H → B.

use hopf_atlas::atlas::subhopf::shipped_surjections;
use hopf_atlas::hopf::{coinvariants, restricts_to_counit, Side};

fn run_example() {
    for s in shipped_surjections() {
        for side in [Side::Right, Side::Left] {
            let r = coinvariants(&s.source, &s.target, &s.map, side).unwrap();
            let counit = restricts_to_counit(&s.source, &s.target, &s.map, &r);
            println!("{} ({side:?}): {} = {}·{}, π|R = ε: {counit}", s.name, s.source.dim, r.dim(), s.target.dim);
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
