use hopf_atlas::atlas::{build, build_named, FamilySpec};
use hopf_atlas::hopf::{hopf_dual, tensor_hopf};
use hopf_atlas::invariants::*;

fn corad(name: &str) -> usize {
    coradical(&build_named(name).unwrap()).dim()
}

#[test]
fn radical_dimensions() {
    let c3 = build_named("kC3").unwrap();
    assert_eq!(radical_of_dual(&c3).dim(), 0);
    let h4 = build_named("h4").unwrap();
    let j = radical_of_dual(&h4);
    assert_eq!(j.dim(), 2);
    assert!(nilpotency_index(&h4, &j).is_some());
    let t3 = build_named("taft3").unwrap();
    let j = radical_of_dual(&t3);
    assert_eq!(j.dim(), 6);
    assert!(nilpotency_index(&t3, &j).is_some());
}

#[test]
fn coradical_dimensions() {
    assert_eq!(corad("kC5"), 5);
    assert_eq!(corad("h4"), 2);
    assert_eq!(corad("taft3"), 3);
    assert_eq!(corad("k8"), 6);
    assert_eq!(corad("dual:a4pp"), 6);
    assert_eq!(corad("dual:am11:3"), 10);
    let h4 = build_named("h4").unwrap();
    let c = coradical(&h4);
    assert!(c.contains(&h4.basis_vec(0)) && c.contains(&h4.basis_vec(2)));
}

#[test]
fn filtrations() {
    assert_eq!(coradical_filtration(&build_named("taft3").unwrap()).layer_dims, vec![3, 6, 9]);
    let h = tensor_hopf(&build_named("h4").unwrap(), &build_named("kC3").unwrap());
    assert_eq!(coradical_filtration(&h).layer_dims, vec![6, 12]);
    let d = coradical_filtration(&build_named("dual:am11:3").unwrap());
    assert_eq!(d.layer_dims[0], 10);
    assert_eq!(*d.layer_dims.last().unwrap(), 12);
}

#[test]
fn grouplike_counts() {
    for n in 2..=4 {
        let t = build(&FamilySpec::Taft(n)).unwrap();
        let g = grouplikes(&t).unwrap();
        assert!(g.complete());
        assert_eq!(g.verified.len(), n as usize);
        assert!(g.orders.unwrap().contains(&(n as usize)));
    }
    let k = grouplikes(&build_named("k8").unwrap()).unwrap();
    assert!(k.complete());
    assert_eq!(k.verified.len(), 2);
    let d3 = grouplikes(&build_named("kD3dual").unwrap()).unwrap();
    assert!(d3.complete());
    assert_eq!(d3.verified.len(), 2);
}

#[test]
fn skew_spaces() {
    let h4 = build_named("h4").unwrap();
    let one = h4.basis_vec(0);
    let g = h4.basis_vec(2);
    let p = skew_space(&h4, &one, &g).unwrap();
    assert_eq!(p.dim(), 2);
    assert!(p.contains(&h4.basis_vec(1)));
    let c5 = build_named("kC5").unwrap();
    let one = c5.basis_vec(0);
    assert_eq!(skew_space(&c5, &one, &one).unwrap().dim(), 0);
}

#[test]
fn antipode_orders() {
    assert_eq!(antipode_order(&build_named("kC2").unwrap(), 1000), AntipodeOrder::Finite(1));
    assert_eq!(antipode_order(&build_named("kC5").unwrap(), 1000), AntipodeOrder::Finite(2));
    assert_eq!(antipode_order(&build_named("h4").unwrap(), 1000), AntipodeOrder::Finite(4));
    assert_eq!(antipode_order(&build_named("taft4").unwrap(), 1000), AntipodeOrder::Finite(8));
    assert_eq!(antipode_order(&build_named("taft4").unwrap(), 5), AntipodeOrder::ExceedsCap(5));
}

#[test]
fn summaries() {
    let s = summarize(&build_named("h4").unwrap()).unwrap();
    assert_eq!((s.r.value, s.s.value), (2, 2));
    assert!(s.trace_s2.is_zero());
    let s = summarize(&build_named("kC6").unwrap()).unwrap();
    assert_eq!((s.r.value, s.s.value), (6, 6));
    assert_eq!(s.trace_s2, hopf_atlas::scalars::Field::new(6).from_int(6));
    let s = summarize(&build_named("dual:am11:3").unwrap()).unwrap();
    assert_eq!((s.r.value, s.s.value), (2, 6));
    assert!(s.r.certified && s.s.certified);
}

#[test]
fn profiles() {
    let k = build_named("k8").unwrap();
    let rep = verify_coalgebra_profile(&k, &ClaimedProfile { g: 2, blocks: vec![(2, 1)] });
    assert!(rep.certified, "{rep}");
    let d = build_named("dual:am11:3").unwrap();
    let rep = verify_coalgebra_profile(&d, &ClaimedProfile { g: 2, blocks: vec![(2, 2)] });
    assert!(rep.certified, "{rep}");
    let t = build_named("taft3").unwrap();
    assert!(verify_coalgebra_profile(&t, &ClaimedProfile { g: 3, blocks: vec![] }).certified);
    let bad = verify_coalgebra_profile(&hopf_dual(&k), &ClaimedProfile { g: 2, blocks: vec![(2, 1)] });
    assert!(!bad.certified);
}

#[test]
fn sub_h4_claims() {
    for name in ["a2", "a4ppp+", "a22", "am10d:3", "tensor(h4,kC3)"] {
        assert!(matches!(sub_h4(&build_named(name).unwrap()).unwrap(), SubH4::Embedding { .. }), "{name}");
    }
    for name in ["a4p", "a4pp", "am10:3", "am11:3"] {
        assert!(matches!(sub_h4(&build_named(name).unwrap()).unwrap(), SubH4::Absent { .. }), "{name}");
    }
}

