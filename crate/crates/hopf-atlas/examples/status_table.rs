// The classification status knowledge base: one dimension, the open
// list, and the rendered table.

use hopf_atlas::kb::{Kb, TableFormat};

fn run_example() {
    let kb = Kb::load().unwrap();
    println!("{}", kb.status(24).unwrap().render());
    println!("open: {:?}", kb.open_dimensions());
    println!("{}", kb.crosscheck_with_prover(66).unwrap().render());
    print!("{}", kb.render_table(TableFormat::Md));
}

#[allow(dead_code)]
fn main() {
    run_example();
}
