use hopf_atlas::atlas::build_named;
use hopf_atlas::hopf::hopf_dual;
use hopf_atlas::iso::*;

fn found(a: &str, b: &str) -> IsoWitness {
    let h = build_named(a).unwrap();
    let k = build_named(b).unwrap();
    match search_iso(&h, &k, &SearchOptions::default()) {
        SearchOutcome::Found { witness, examined } => {
            eprintln!("{a} -> {b}: {examined} examined");
            let rep = verify_iso(&h, &k, &witness);
            assert!(rep.ok, "{rep}");
            let inv = inverse_witness(&h, &k, &witness).unwrap();
            assert!(verify_iso(&k, &h, &inv).ok);
            witness
        }
        other => panic!("{a} -> {b}: {other:?}"),
    }
}

#[test]
fn self_dualities() {
    for (a, b) in [
        ("h4", "dual:h4"),
        ("taft3", "dual:taft3"),
        ("taft4", "dual:taft4"),
        ("a2", "dual:a2"),
        ("a22", "dual:a22"),
        ("a4ppp+", "dual:a4p"),
        ("a4ppp+", "a4ppp-"),
        ("tensor(h4,kC3)", "dual:tensor(h4,kC3)"),
    ] {
        found(a, b);
    }
}

#[test]
fn a4p_vs_a4pp() {
    let h = build_named("a4p").unwrap();
    let k = build_named("a4pp").unwrap();
    assert!(matches!(search_iso(&h, &k, &SearchOptions::default()), SearchOutcome::NoneFound { .. }));
    let d = distinguish(&h, &k);
    eprintln!("{d:?}");
    assert!(!d.is_empty());
    assert!(distinguish(&h, &h).is_empty());
    let _ = hopf_dual(&h);
}
