use hopf_atlas::atlas::{atlas_families, build};
use hopf_atlas::format::{algebra_from_str, algebra_to_string, FormatError};
use hopf_atlas::hopf::{hopf_dual, verify_hopf};

#[test]
fn every_family_round_trips_byte_identically() {
    for s in atlas_families() {
        let h = build(&s).unwrap();
        let text = algebra_to_string(&h);
        let back = algebra_from_str(&text).unwrap();
        assert!(back.same_tensors(&h), "{}", s.name());
        assert_eq!(algebra_to_string(&back), text, "{}", s.name());
    }
}

#[test]
fn duals_round_trip_and_still_verify() {
    for name in ["h4", "taft3", "a4pp", "am11:3"] {
        let h = hopf_dual(&hopf_atlas::atlas::build_named(name).unwrap());
        let back = algebra_from_str(&algebra_to_string(&h)).unwrap();
        assert!(verify_hopf(&back).unwrap().ok(), "{name}");
    }
}

#[test]
fn malformed_input_is_rejected() {
    let h = hopf_atlas::atlas::build_named("h4").unwrap();
    let text = algebra_to_string(&h);
    assert!(matches!(algebra_from_str("{"), Err(FormatError::Json(_))));
    assert!(algebra_from_str(&text.replacen("\"dim\": 4", "\"dim\": 5", 1)).is_err());
    assert!(matches!(algebra_from_str("[]"), Err(FormatError::Field { .. })));
}
