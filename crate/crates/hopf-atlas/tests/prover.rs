use hopf_atlas::prover::trace::{self, replay, to_json};
use hopf_atlas::prover::*;
use num_integer::{gcd, lcm};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ext(flags: &[Flag]) -> Assumptions {
    Assumptions::default().with_flags(flags)
}

#[test]
fn profile_enumeration_contains_the_small_cases() {
    let ps = profiles_for_g(24, 2, &Assumptions::default());
    for blocks in [vec![(2, 1)], vec![(3, 2)], vec![(4, 1)]] {
        assert!(ps.contains(&Profile { n: 24, g: 2, blocks }), "missing");
    }
    for p in enumerate_profiles(96, &Assumptions::default()).unwrap() {
        assert!(p.c0() < p.n && p.n % p.g == 0 && !p.blocks.is_empty());
        assert!(p.blocks.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(p.blocks.iter().all(|&(d, m)| d >= 2 && m >= 1 && (m * d * d) % p.g == 0));
    }
    // g = 4p at 8p: any block costs at least 4p
    for p in [3, 5, 7, 11] {
        assert!(profiles_for_g(8 * p, 4 * p, &Assumptions::default()).is_empty());
    }
}

// Brute-force profile count: every multiset of (d, m) with distinct d.
fn brute_profile_count(n: u32, g: u32) -> usize {
    fn rec(n: u32, g: u32, dmin: u32, left: i64) -> usize {
        let mut c = 1;
        for d in dmin..=n {
            for m in 1..=n {
                let cost = (m * d * d) as i64;
                if cost > left {
                    break;
                }
                if (m * d * d) % g == 0 {
                    c += rec(n, g, d + 1, left - cost);
                }
            }
        }
        c
    }
    if g >= n {
        return 0;
    }
    rec(n, g, 2, (n - g - 1) as i64) - 1
}

#[test]
fn profile_counts_match_brute_force() {
    for n in [12, 24, 30, 36, 42, 48, 60] {
        for g in divisors(n) {
            assert_eq!(profiles_for_g(n, g, &Assumptions::default()).len(), brute_profile_count(n, g), "n={n} g={g}");
        }
    }
}

#[test]
fn base_pack_eliminations() {
    let a = Assumptions::default();
    for p in [3u32, 5, 7, 11] {
        let r = prove(8 * p, &a, Pack::Base).unwrap();
        assert!(r.result(p).unwrap().eliminated, "8p, g=p, p={p}");
        assert!(r.result(8 * p).unwrap().eliminated);
        assert!(r.result(4 * p).unwrap().eliminated);
    }
    for n in [24, 40, 56] {
        assert!(prove(n, &a, Pack::Base).unwrap().result(8).unwrap().eliminated, "n={n}");
    }
    let r = prove(42, &a, Pack::Base).unwrap();
    for g in [6, 7, 14, 21] {
        assert!(r.result(g).unwrap().eliminated, "42 g={g}");
    }
    let r = prove(70, &a, Pack::Base).unwrap();
    for g in [7, 10, 14] {
        assert!(r.result(g).unwrap().eliminated);
    }
    let r = prove(66, &a, Pack::Base).unwrap();
    for g in [11, 22, 33] {
        assert!(r.result(g).unwrap().eliminated);
    }
    let r = prove(78, &a, Pack::Base).unwrap();
    for g in [13, 26, 39] {
        assert!(r.result(g).unwrap().eliminated);
    }
}

#[test]
fn the_bound_on_a_single_profile() {
    // c0 = 25, bound 25 + 5*5 + 4 = 54 ≤ 70
    let p = Profile { n: 70, g: 5, blocks: vec![(2, 5)] };
    assert!(!apply_base_pack(&p, &Assumptions::default()).eliminated());
    let p = Profile { n: 70, g: 5, blocks: vec![(2, 10)] };
    assert!(apply_extended_pack(&p, &Assumptions::default()).eliminated());
}

#[test]
fn extended_pack_eliminations() {
    let fo2 = ext(&[Flag::FullOrbit(2)]);
    let r = prove(70, &fo2, Pack::Extended).unwrap();
    assert!(r.result(5).unwrap().eliminated);
    assert!(!prove(70, &Assumptions::default(), Pack::Extended).unwrap().result(5).unwrap().eliminated);

    let both = ext(&[Flag::FullOrbit(2), Flag::FreeTranslation]);
    assert!(prove(66, &both, Pack::Extended).unwrap().result(6).unwrap().eliminated);

    let r = prove(78, &both, Pack::Extended).unwrap();
    let g6 = r.result(6).unwrap();
    assert!(!g6.eliminated);
    let surv: Vec<_> = g6.profiles.iter().filter(|p| !p.verdict.eliminated()).collect();
    assert_eq!(surv.len(), 1);
    assert_eq!(surv[0].profile.blocks, vec![(2, 6)]);
    let Verdict::Feasible { witness: Some(w) } = &surv[0].verdict else { panic!() };
    assert_eq!((w.y_gg, w.y_gd.clone(), w.y_dd.clone()), (12, vec![12], vec![12]));

    let r = prove(42, &both, Pack::Extended).unwrap();
    let g3 = r.result(3).unwrap();
    let surv: Vec<_> = g3.profiles.iter().filter(|p| !p.verdict.eliminated()).collect();
    assert_eq!(surv.len(), 1);
    assert_eq!(surv[0].profile.blocks, vec![(3, 1)]);
    let Verdict::Feasible { witness: Some(w) } = &surv[0].verdict else { panic!() };
    assert_eq!((w.y_gg, w.y_gd[0], w.y_dd[0]), (3, 9, 9));
    let (c, _) = constraints_for(&surv[0].profile, &both);
    assert_eq!(all_assignments(&c).len(), 1);
}

#[test]
fn surviving_sets_with_the_axiom() {
    let a = ext(&[Flag::FullOrbit(2), Flag::FreeTranslation]).with_axiom(Axiom::PqHalf);
    let cases: [(u32, &[u32]); 4] = [(42, &[1, 2, 3]), (66, &[1, 2, 3]), (70, &[1, 2]), (78, &[1, 2, 3, 6])];
    for (n, allowed) in cases {
        let r = prove(n, &a, Pack::Extended).unwrap();
        for g in r.surviving() {
            assert!(allowed.contains(&g), "n={n}: g={g} survives");
        }
        let pq = r.result(n / 2).unwrap();
        assert!(pq.used_axiom && pq.steps[0].kind == StepKind::Axiom);
        replay(&to_json(&r)).unwrap();
    }
    let r = prove(70, &a, Pack::Extended).unwrap();
    assert_eq!(r.summary(), "eliminated: 5,7,10,14,35*,70 (* axiom)\nsurviving: 1,2");
}

#[test]
fn bad_parameters() {
    assert!(matches!(prove(3, &Assumptions::default(), Pack::Base), Err(ProverError::Range(3))));
    assert!(matches!(prove(201, &Assumptions::default(), Pack::Base), Err(ProverError::Range(201))));
    assert!(matches!(prove(24, &ext(&[Flag::FullOrbit(5)]), Pack::Extended), Err(ProverError::AbsentClass(5, 24))));
    assert!(Axiom::parse("nope").is_err());
}

#[test]
fn tampered_traces_are_rejected() {
    let r = prove(70, &ext(&[Flag::FullOrbit(2)]), Pack::Extended).unwrap();
    let j = to_json(&r);
    replay(&j).unwrap();
    // a forged bound fails the step check, not just the byte comparison
    let (profile, mut step) = r
        .results
        .iter()
        .flat_map(|g| &g.profiles)
        .find_map(|p| match &p.verdict {
            Verdict::Eliminated { steps } => steps.iter().find(|s| s.rule == "R-bound").map(|s| (p.profile.clone(), s.clone())),
            _ => None,
        })
        .unwrap();
    trace::check_step(&step, Some(&profile), &r.assumptions).unwrap();
    for v in step.values.iter_mut().filter(|v| v.0 == "bound") {
        v.1 = 60;
    }
    assert!(trace::check_step(&step, Some(&profile), &r.assumptions).is_err());
    let mut r2 = r.clone();
    r2.results[0].eliminated = !r2.results[0].eliminated;
    assert!(replay(&to_json(&r2)).is_err());
}

// Independent brute force over P-block assignments, straight from the rules.
fn naive(p: &Profile, flags: &[Flag]) -> Vec<(u32, Vec<u32>, Vec<u32>)> {
    let n = p.n;
    let g = p.g;
    let ds: Vec<u32> = p.blocks.iter().map(|b| b.0).collect();
    let k = ds.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let skewless = gcd(g, n / g) == 1;
    let remaining = n - p.c0();
    let nvars = 1 + k + pairs.len();
    let weight = |v: usize| if (1..=k).contains(&v) { 2 } else { 1 };
    let mut out = Vec::new();
    let mut vals = vec![0u32; nvars];
    fn rec(v: usize, left: u32, vals: &mut Vec<u32>, nvars: usize, weight: &dyn Fn(usize) -> u32, emit: &mut dyn FnMut(&[u32])) {
        if v == nvars {
            if left == 0 {
                emit(vals);
            }
            return;
        }
        let mut x = 0;
        while weight(v) * x <= left {
            vals[v] = x;
            rec(v + 1, left - weight(v) * x, vals, nvars, weight, emit);
            x += 1;
        }
    }
    rec(0, remaining, &mut vals, nvars, &weight, &mut |vals| {
        let gg = vals[0];
        let gd = &vals[1..1 + k];
        let dd = &vals[1 + k..];
        if gg % g != 0 {
            return;
        }
        for i in 0..k {
            if gd[i] % (g * ds[i]) != 0 {
                return;
            }
        }
        for (s, &(i, j)) in pairs.iter().enumerate() {
            if dd[s] % (ds[i] * ds[j]) != 0 {
                return;
            }
            if flags.contains(&Flag::FreeTranslation) && dd[s] % lcm(g, ds[i] * ds[j]) != 0 {
                return;
            }
        }
        for f in flags {
            if let Flag::FullOrbit(d) = *f {
                if let Some(i) = ds.iter().position(|&x| x == d) {
                    let m = p.blocks[i].1;
                    if m * d * d == lcm(g, d * d) && gd[i] < g * d * m {
                        return;
                    }
                }
            }
        }
        if skewless {
            let diag = |i: usize| pairs.iter().position(|&pr| pr == (i, i)).unwrap();
            if gg < g || !(0..k).any(|i| gd[i] >= g * ds[i] && dd[diag(i)] >= ds[i] * ds[i]) {
                return;
            }
        }
        out.push((gg, gd.to_vec(), dd.to_vec()));
    });
    out
}

#[test]
fn search_agrees_with_naive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(20261014);
    let flag_sets: [&[Flag]; 4] = [&[], &[Flag::FreeTranslation], &[Flag::FullOrbit(2)], &[Flag::FullOrbit(2), Flag::FreeTranslation]];
    let mut checked = 0;
    while checked < 40 {
        let n = rng.gen_range(8..=60u32);
        let profiles = enumerate_profiles(n, &Assumptions::default()).unwrap();
        if profiles.is_empty() {
            continue;
        }
        let p = &profiles[rng.gen_range(0..profiles.len())];
        if p.blocks.len() > 2 {
            continue;
        }
        let flags = flag_sets[rng.gen_range(0..flag_sets.len())];
        let a = ext(flags);
        let (c, _) = constraints_for(p, &a);
        let fast: Vec<_> = all_assignments(&c).into_iter().map(|w| (w.y_gg, w.y_gd, w.y_dd)).collect();
        let slow = naive(p, flags);
        assert_eq!(fast, slow, "n={n} {p} flags={flags:?}");
        let v = apply_extended_pack(p, &a);
        let base = apply_base_pack(p, &a).eliminated();
        assert_eq!(v.eliminated(), base || slow.is_empty(), "n={n} {p}");
        checked += 1;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn flags_never_grow_the_surviving_set(n in 8u32..=100, fo in any::<bool>(), ft in any::<bool>()) {
        let mut flags = vec![];
        if fo { flags.push(Flag::FullOrbit(2)); }
        if ft { flags.push(Flag::FreeTranslation); }
        let plain = prove(n, &Assumptions::default(), Pack::Extended).unwrap().surviving();
        if let Ok(r) = prove(n, &ext(&flags), Pack::Extended) {
            for g in r.surviving() {
                prop_assert!(plain.contains(&g));
            }
        }
    }

    #[test]
    fn extended_refines_base(n in 4u32..=120) {
        let a = Assumptions::default();
        let base = prove(n, &a, Pack::Base).unwrap().surviving();
        for g in prove(n, &a, Pack::Extended).unwrap().surviving() {
            prop_assert!(base.contains(&g));
        }
    }

    #[test]
    fn traces_replay(n in 4u32..=100, ext_pack in any::<bool>(), fo in any::<bool>(), pointed in any::<bool>()) {
        let mut a = Assumptions::default();
        if fo && n >= 12 { a = a.with_flags(&[Flag::FullOrbit(2)]); }
        if pointed { a = a.pointed_ok(); }
        let pack = if ext_pack { Pack::Extended } else { Pack::Base };
        if let Ok(r) = prove(n, &a, pack) {
            let j = to_json(&r);
            let back = replay(&j).unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
