use hopf_atlas::atlas::build_named;
use hopf_atlas::atlas::witnesses::{builtin_witnesses, WITNESS_PAIRS};
use hopf_atlas::format::{witnesses_from_str, witnesses_to_string};
use hopf_atlas::iso::{distinguish, inverse_witness, verify_iso};

#[test]
fn every_shipped_witness_verifies_both_ways() {
    let ws = builtin_witnesses();
    assert_eq!(ws.len(), WITNESS_PAIRS.len() + 1);
    for w in &ws {
        let (h, k) = (build_named(&w.source).unwrap(), build_named(&w.target).unwrap());
        let rep = verify_iso(&h, &k, w);
        assert!(rep.ok, "{} → {}: {rep}", w.source, w.target);
        let inv = inverse_witness(&h, &k, w).expect("inverse");
        assert!(verify_iso(&k, &h, &inv).ok, "{} ← {}", w.source, w.target);
        assert!(distinguish(&h, &k).is_empty(), "{} vs {}", w.source, w.target);
    }
}

#[test]
fn a_witness_for_the_wrong_target_fails() {
    let w = builtin_witnesses().into_iter().find(|w| w.source == "k8").unwrap();
    let wrong = build_named("a4p").unwrap();
    assert!(!verify_iso(&build_named("k8").unwrap(), &wrong, &w).ok);
}

#[test]
fn the_witness_file_round_trips() {
    let text = include_str!("../data/witnesses.json");
    let ws = witnesses_from_str(text).unwrap();
    assert_eq!(witnesses_to_string(&ws), text);
}
