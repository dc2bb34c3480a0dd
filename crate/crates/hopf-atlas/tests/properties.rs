use hopf_atlas::atlas::{atlas_families, build, build_named, FamilySpec};
use hopf_atlas::hopf::{hopf_dual, FinHopf};
use hopf_atlas::invariants::*;
use hopf_atlas::linalg::{Subspace, Vector};
use hopf_atlas::scalars::{Field, FieldElem, Rational};
use num_integer::gcd;
use proptest::prelude::*;

const ORDERS: &[u32] = &[1, 2, 3, 4, 5, 6, 8, 12];

fn elem(field: &Field, raw: &[(i64, i64)]) -> FieldElem {
    let mut coords: Vec<Rational> = raw.iter().take(field.degree()).map(|&(n, d)| Rational::new(n.into(), d.into())).collect();
    coords.resize(field.degree(), Rational::from_integer(0.into()));
    field.from_coords(coords).unwrap()
}

fn coords() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=5), 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(k in 0..ORDERS.len(), a in coords(), b in coords(), c in coords()) {
        let f = Field::new(ORDERS[k]);
        let (a, b, c) = (elem(&f, &a), elem(&f, &b), elem(&f, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn embedding_is_a_homomorphism(k in 0..4usize, a in coords(), b in coords()) {
        // Q(ζ_N) ⊂ Q(ζ_2N) ⊂ Q(ζ_12·N) for small N
        let n = [1u32, 2, 3, 4][k];
        let f = Field::new(n);
        let m = 12 * n / gcd(12, n) * 2;
        let (a, b) = (elem(&f, &a), elem(&f, &b));
        let e = |x: &FieldElem| x.embed(m).unwrap();
        prop_assert_eq!(e(&(&a * &b)), &e(&a) * &e(&b));
        prop_assert_eq!(e(&(&a + &b)), &e(&a) + &e(&b));
    }

    #[test]
    fn canonical_form_ignores_the_spanning_set(seed in any::<u64>(), picks in prop::collection::vec((0usize..4, -3i64..=3), 3..8)) {
        let f = Field::new(3);
        let n = 5;
        let gens: Vec<Vector> = (0..4)
            .map(|i| (0..n).map(|j| entry(&f, i, j, seed)).collect())
            .collect();
        let base = Subspace::span(&f, n, gens.clone());
        // add combinations of the generators and shuffle
        let mut more = gens.clone();
        for &(i, c) in &picks {
            let mut v = gens[i].clone();
            let j = (i + 1) % gens.len();
            for (x, y) in v.iter_mut().zip(&gens[j]) {
                *x = &*x + &(&f.from_int(c) * y);
            }
            more.push(v);
        }
        more.reverse();
        let rot = (seed % more.len() as u64) as usize;
        more.rotate_left(rot);
        let other = Subspace::span(&f, n, more);
        prop_assert_eq!(base.basis(), other.basis());
        prop_assert_eq!(base.pivots(), other.pivots());
    }
}

// small pseudo-random entries mixing in ζ
fn entry(f: &Field, i: usize, j: usize, seed: u64) -> FieldElem {
    let h = seed.wrapping_mul(6364136223846793005).wrapping_add((i * 7 + j * 13) as u64);
    let (a, b) = ((h >> 33) % 5, (h >> 45) % 3);
    &f.from_int(a as i64 - 2) + &(&f.from_int(b as i64 - 1) * &f.zeta())
}

#[test]
fn zeta_has_exact_order() {
    for n in 1..=24 {
        let f = Field::new(n);
        assert_eq!(f.zeta().multiplicative_order(100), Some(n as u64), "ζ_{n}");
        assert_eq!(f.roots_of_unity().len(), if n % 2 == 1 { 2 * n as usize } else { n as usize });
    }
}

fn p3_atlas() -> Vec<FinHopf> {
    let mut v = Vec::new();
    for s in [FamilySpec::Apm10(3), FamilySpec::Apm10dual(3), FamilySpec::Apm11(3), FamilySpec::H4xCp(3)] {
        let h = build(&s).unwrap();
        v.push(hopf_dual(&h));
        v.push(h);
    }
    v
}

fn small_nonsemisimple() -> Vec<FinHopf> {
    let mut v: Vec<FinHopf> = ["h4", "taft3", "a4p", "a4pp", "a4ppp+", "a22", "k8"].iter().map(|n| build_named(n).unwrap()).collect();
    v.extend(p3_atlas());
    v
}

fn kron(u: &[FieldElem], v: &[FieldElem]) -> Vector {
    u.iter().flat_map(|a| v.iter().map(move |b| a * b)).collect()
}

fn layer(ls: &[Subspace], k: usize) -> &Subspace {
    &ls[k.min(ls.len() - 1)]
}

#[test]
fn filtration_is_a_hopf_filtration() {
    for h in p3_atlas() {
        let ls = filtration_layers(&h);
        let n = h.dim;
        // H_m·H_n ⊆ H_{m+n} needs H_0 to be a subalgebra
        let h0 = &ls[0];
        let chevalley = h0.basis().iter().all(|a| h0.basis().iter().all(|b| h0.contains(&h.mul(a, b))));
        assert_eq!(chevalley, h.name != "dual(am11:3)", "{}", h.name);
        assert_eq!(ls.last().unwrap().dim(), n, "{}: exhaustive", h.name);
        for w in ls.windows(2) {
            assert!(w[1].contains_subspace(&w[0]), "{}: increasing", h.name);
        }
        for k in 0..ls.len() {
            // Δ(H_k) ⊆ Σ H_i ⊗ H_{k−i}
            let mut target = Subspace::zero(&h.field, n * n);
            for i in 0..=k {
                let span = layer(&ls, i).basis().iter().flat_map(|u| layer(&ls, k - i).basis().iter().map(move |v| kron(u, v)));
                target = target.join(&Subspace::span(&h.field, n * n, span.collect::<Vec<_>>()));
            }
            for b in layer(&ls, k).basis() {
                assert!(target.contains(&h.comult_vec(b)), "{}: Δ(H_{k})", h.name);
                assert!(layer(&ls, k).contains(&h.antipode_vec(b)), "{}: S(H_{k})", h.name);
            }
            if !chevalley {
                continue;
            }
            for m in 0..=k {
                for a in layer(&ls, m).basis() {
                    for b in layer(&ls, k - m).basis() {
                        assert!(layer(&ls, k).contains(&h.mul(a, b)), "{}: H_{m}·H_{}", h.name, k - m);
                    }
                }
            }
        }
    }
}

#[test]
fn coradical_and_dual_radical_are_complementary() {
    for h in small_nonsemisimple() {
        let c = coradical(&h).dim();
        let j = radical_of_dual(&h).dim();
        assert_eq!(c + j, h.dim, "{}", h.name);
    }
}

#[test]
fn grouplike_count_divides_the_layers_and_blocks() {
    for h in small_nonsemisimple() {
        let s = summarize(&h).unwrap();
        assert!(s.r.certified, "{}: r not certified", h.name);
        let r = s.r.value;
        for d in &s.filtration.layer_dims {
            assert_eq!(d % r, 0, "{}: r={r} ∤ {d}", h.name);
        }
        let p = metadata_profile(&h);
        if verify_coalgebra_profile(&h, &p).certified {
            for (d, m) in &p.blocks {
                assert_eq!(m * d * d % r, 0, "{}: block ({d},{m})", h.name);
            }
        }
    }
}

#[test]
fn coprime_grouplike_count_forbids_skew_primitives() {
    let mut gated = 0;
    for h in atlas_families().iter().map(|s| build(s).unwrap()) {
        let s = summarize(&h).unwrap();
        let r = s.r.value;
        if s.r.certified && gcd(r, h.dim / r) == 1 {
            gated += 1;
            assert!(s.skew_table.values().all(|&d| d <= 1), "{}", h.name);
        }
    }
    assert!(gated > 0);
}

#[test]
fn exact_sequence_dual_coradical() {
    let t = build_named("tensor(h4,kC3)").unwrap();
    assert_eq!(coradical(&hopf_dual(&t)).dim(), 6);
}
