use hopf_atlas::atlas::build_named;
use hopf_atlas::atlas::subhopf::shipped_surjections;
use hopf_atlas::hopf::{coinvariants, restricts_to_counit, trivial_hopf, verify_hopf_morphism, Side};
use hopf_atlas::linalg::LinearMap;

#[test]
fn dimension_law_on_both_sides() {
    let ss = shipped_surjections();
    assert_eq!(ss.len(), 3);
    for s in &ss {
        for side in [Side::Left, Side::Right] {
            let r = coinvariants(&s.source, &s.target, &s.map, side).unwrap();
            assert_eq!(r.dim() * s.target.dim, s.source.dim, "{} {side:?}", s.name);
            assert!(restricts_to_counit(&s.source, &s.target, &s.map, &r), "{} {side:?}", s.name);
            assert!(r.contains(&s.source.one()));
        }
    }
}

#[test]
fn the_identity_has_trivial_coinvariants() {
    for name in ["h4", "taft3", "kC3"] {
        let h = build_named(name).unwrap();
        let id = LinearMap::identity(&h.field, h.dim);
        for side in [Side::Left, Side::Right] {
            assert_eq!(coinvariants(&h, &h, &id, side).unwrap().dim(), 1, "{name}");
        }
    }
}

#[test]
fn the_counit_has_everything_coinvariant() {
    let h = build_named("h4").unwrap();
    let k = trivial_hopf(&h.field);
    let eps = LinearMap::from_columns(1, (0..h.dim).map(|i| vec![h.counit[i].clone()]).collect());
    assert!(verify_hopf_morphism(&eps, &h, &k).unwrap().ok());
    assert_eq!(coinvariants(&h, &k, &eps, Side::Right).unwrap().dim(), h.dim);
}

#[test]
fn a_non_morphism_is_refused() {
    let h = build_named("h4").unwrap();
    let zero = LinearMap::zero(&h.field, h.dim, h.dim);
    assert!(coinvariants(&h, &h, &zero, Side::Left).is_err());
}
