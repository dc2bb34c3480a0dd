// Which algebras contain a copy of H₄, with the certificate either way.

use hopf_atlas::atlas::subhopf::{sub_hopf_claims, ClaimResult};
use hopf_atlas::atlas::FamilySpec;

fn run_example() {
    for name in ["am10:3", "am11:3", "h4xc:3"] {
        let spec = FamilySpec::parse(name).unwrap();
        for c in sub_hopf_claims(&spec).unwrap() {
            let how = match &c.result {
                ClaimResult::Embedding(m) => format!("embedding of rank {}", m.rank()),
                ClaimResult::Absent(why) => why.clone(),
                ClaimResult::Undecided(why) => format!("undecided: {why}"),
            };
            println!("{}: {} ({how})", c.claim, if c.confirmed() { "confirmed" } else { "NOT confirmed" });
        }
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
