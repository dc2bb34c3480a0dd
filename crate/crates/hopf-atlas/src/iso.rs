//! Isomorphism witnesses: verification, a bounded grid search, and
//! invariant-based separation.
//!
//! A witness names the image of every generator of the source; the map is
//! extended along the source monomials and is well defined exactly when
//! f(gen · b_k) = f(gen) f(b_k) for every generator and basis element.
//!
//! Search order (deterministic): grouplike generators take images among the
//! certified grouplikes of the target with the same order, tuples in
//! lexicographic order of target index; each skew generator x ∈ 𝒫_{1,γ} then
//! takes images Σ c_i v_i over a complement {v_i} of k(1−γ') in 𝒫_{1,γ'}(K),
//! coefficient tuples enumerated as an odometer over the grid (first
//! coordinate slowest). The grid order is 0, 1, −1, ζ, −ζ, …, ζ^{N−1},
//! −ζ^{N−1}, 1/2, −1/2, 2, −2 with duplicates dropped.

use crate::hopf::{verify_hopf_morphism, FinHopf};
use crate::invariants::{self, grouplikes, skew_space, SubH4};
use crate::linalg::{add_scaled, is_zero_vec, sub_vec, zero_vec, Echelon, LinearMap, Vector};
use crate::scalars::{lcm_order, Field, FieldElem};

#[derive(Clone, Debug, PartialEq)]
pub struct IsoWitness {
    pub source: String,
    pub target: String,
    /// Cyclotomic order the images are written over.
    pub field_order: u32,
    pub generator_images: Vec<(String, Vector)>,
}

#[derive(Clone, Debug)]
pub struct IsoReport {
    pub ok: bool,
    pub failures: Vec<String>,
    pub map: Option<LinearMap>,
}

impl std::fmt::Display for IsoReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.ok {
            write!(f, "ok: isomorphism verified")
        } else {
            write!(f, "failed: {}", self.failures.join("; "))
        }
    }
}

/// Generators and words of `h`; without presentation data every basis
/// vector is a generator `b{k}` with word [k].
pub fn presentation(h: &FinHopf) -> (Vec<(String, Vector)>, Vec<Vec<usize>>) {
    let md = &h.metadata;
    if !md.claimed_generators.is_empty() && md.monomials.len() == h.dim {
        return (md.claimed_generators.clone(), md.monomials.clone());
    }
    let gens = (0..h.dim).map(|k| (format!("b{k}"), h.basis_vec(k))).collect();
    (gens, (0..h.dim).map(|k| vec![k]).collect())
}

/// Brings both algebras (and optionally a third order) into one field.
pub fn common_field(h: &FinHopf, k: &FinHopf, extra: u32) -> (FinHopf, FinHopf) {
    let m = lcm_order(lcm_order(h.field.order(), k.field.order()), extra);
    (h.embed(m), k.embed(m))
}

fn word_image(k: &FinHopf, word: &[usize], imgs: &[Option<Vector>]) -> Option<Vector> {
    let mut acc = k.one();
    for &g in word {
        acc = k.mul(&acc, imgs[g].as_ref()?);
    }
    Some(acc)
}

/// Images of the basis under the multiplicative extension, if every letter
/// involved has an image.
fn extend(k: &FinHopf, words: &[Vec<usize>], imgs: &[Option<Vector>]) -> Vec<Option<Vector>> {
    words.iter().map(|w| word_image(k, w, imgs)).collect()
}

/// Checks f(gen·b_k) = f(gen) f(b_k) wherever every term is defined.
/// Returns the first violating (generator, basis index).
fn relations_hold(
    h: &FinHopf,
    k: &FinHopf,
    gens: &[(String, Vector)],
    imgs: &[Option<Vector>],
    basis_imgs: &[Option<Vector>],
) -> Result<(), (usize, usize)> {
    let n = h.dim;
    for (gi, (_, gv)) in gens.iter().enumerate() {
        let Some(fg) = &imgs[gi] else { continue };
        for b in 0..n {
            let Some(fb) = &basis_imgs[b] else { continue };
            let prod = h.mul(gv, &h.basis_vec(b));
            let mut lhs = k.zero_vec();
            let mut defined = true;
            for (l, c) in prod.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                match &basis_imgs[l] {
                    Some(v) => add_scaled(&mut lhs, c, v),
                    None => {
                        defined = false;
                        break;
                    }
                }
            }
            if defined && lhs != k.mul(fg, fb) {
                return Err((gi, b));
            }
        }
    }
    Ok(())
}

/// The induced linear map, or an explanation why the images do not define
/// an algebra map.
pub fn induced_map(h: &FinHopf, k: &FinHopf, images: &[Vector]) -> Result<LinearMap, String> {
    let (gens, words) = presentation(h);
    if images.len() != gens.len() {
        return Err(format!("{} generator images for {} generators", images.len(), gens.len()));
    }
    let imgs: Vec<Option<Vector>> = images.iter().cloned().map(Some).collect();
    let basis = extend(k, &words, &imgs);
    relations_hold(h, k, &gens, &imgs, &basis).map_err(|(g, b)| {
        format!("not well-defined on relations, witness invalid (generator {} times basis {b})", gens[g].0)
    })?;
    Ok(LinearMap::from_columns(k.dim, basis.into_iter().map(|v| v.unwrap()).collect()))
}

pub fn verify_iso(h: &FinHopf, k: &FinHopf, w: &IsoWitness) -> IsoReport {
    let fail = |msg: String| IsoReport { ok: false, failures: vec![msg], map: None };
    if h.dim != k.dim {
        return fail(format!("dimensions differ: {} vs {}", h.dim, k.dim));
    }
    let (h, k) = common_field(h, k, w.field_order);
    let f = h.field.clone();
    let (gens, _) = presentation(&h);
    let mut images = Vec::with_capacity(gens.len());
    for (name, _) in &gens {
        match w.generator_images.iter().find(|(n, _)| n == name) {
            Some((_, v)) if v.len() == k.dim => images.push(v.iter().map(|c| c.embed_into(&f)).collect()),
            Some(_) => return fail(format!("image of {name} has the wrong length")),
            None => return fail(format!("no image given for generator {name}")),
        }
    }
    let map = match induced_map(&h, &k, &images) {
        Ok(m) => m,
        Err(e) => return fail(e),
    };
    let mut failures = Vec::new();
    if map.rank() != h.dim {
        failures.push(format!("not bijective (rank {} of {})", map.rank(), h.dim));
    }
    match verify_hopf_morphism(&map, &h, &k) {
        Ok(rep) if rep.ok() => {}
        Ok(rep) => failures.push(format!("morphism axioms fail: {}", rep.failed_axioms().join(", "))),
        Err(e) => failures.push(e.to_string()),
    }
    IsoReport { ok: failures.is_empty(), failures, map: Some(map) }
}

/// Witness for K → H from a verified H → K witness (images of K's
/// presentation generators under the exact inverse).
pub fn inverse_witness(h: &FinHopf, k: &FinHopf, w: &IsoWitness) -> Option<IsoWitness> {
    let rep = verify_iso(h, k, w);
    let map = rep.map.filter(|_| rep.ok)?;
    let (h, k) = common_field(h, k, w.field_order);
    let inv = map.inverse(&h.field)?;
    let (kgens, _) = presentation(&k);
    Some(IsoWitness {
        source: w.target.clone(),
        target: w.source.clone(),
        field_order: h.field.order(),
        generator_images: kgens.into_iter().map(|(name, v)| (name, inv.apply(&v))).collect(),
    })
}

pub fn default_grid(field: &Field) -> Vec<FieldElem> {
    let mut out: Vec<FieldElem> = vec![field.zero(), field.one(), field.from_int(-1)];
    for k in 1..field.order() as i64 {
        let z = field.zeta_pow(k);
        out.push(z.clone());
        out.push(-&z);
    }
    out.extend([field.from_frac(1, 2), field.from_frac(-1, 2), field.from_int(2), field.from_int(-2)]);
    let mut seen: Vec<FieldElem> = Vec::new();
    for x in out {
        if !seen.contains(&x) {
            seen.push(x);
        }
    }
    seen
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub grid: Option<Vec<FieldElem>>,
    /// Maximal number of candidate generator images examined.
    pub budget: u64,
    /// Work over Q(ζ_M) with M a multiple of this order as well.
    pub field_order: u32,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { grid: None, budget: 2_000_000, field_order: 1 }
    }
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found { witness: IsoWitness, examined: u64 },
    /// Budget or grid exhausted; this is not a proof of non-isomorphism.
    NoneFound { examined: u64, exhausted_grid: bool },
    Unsupported(String),
}

enum GenKind {
    Grouplike(usize),
    /// (1, γ)-skew-primitive with γ = product of these grouplike generators.
    Skew(Vec<usize>),
}

fn power_order(h: &FinHopf, v: &[FieldElem]) -> Option<usize> {
    let mut acc = v.to_vec();
    for k in 1..=h.dim * h.dim + 1 {
        if acc == h.unit {
            return Some(k);
        }
        acc = h.mul(&acc, v);
    }
    None
}

struct Searcher<'a> {
    h: &'a FinHopf,
    k: &'a FinHopf,
    gens: Vec<(String, Vector)>,
    words: Vec<Vec<usize>>,
    examined: u64,
    budget: u64,
}

impl Searcher<'_> {
    fn check(&mut self, imgs: &[Option<Vector>]) -> Option<bool> {
        if self.examined >= self.budget {
            return None;
        }
        self.examined += 1;
        let basis = extend(self.k, &self.words, imgs);
        Some(relations_hold(self.h, self.k, &self.gens, imgs, &basis).is_ok())
    }

    fn finish(&self, imgs: &[Option<Vector>]) -> bool {
        let basis = extend(self.k, &self.words, imgs);
        let cols: Vec<Vector> = basis.into_iter().map(|v| v.unwrap()).collect();
        let map = LinearMap::from_columns(self.k.dim, cols);
        map.rank() == self.h.dim && verify_hopf_morphism(&map, self.h, self.k).map(|r| r.ok()).unwrap_or(false)
    }
}

pub fn search_iso(h: &FinHopf, k: &FinHopf, opts: &SearchOptions) -> SearchOutcome {
    if h.dim != k.dim {
        return SearchOutcome::NoneFound { examined: 0, exhausted_grid: true };
    }
    let (h, k) = common_field(h, k, opts.field_order);
    let f = h.field.clone();
    let (gens, words) = presentation(&h);
    let grid: Vec<FieldElem> = match &opts.grid {
        Some(g) => g.iter().map(|c| c.embed_into(&f)).collect(),
        None => default_grid(&f),
    };
    let gh = match grouplikes(&h) {
        Ok(g) => g,
        Err(e) => return SearchOutcome::Unsupported(e.to_string()),
    };
    // classify the source generators
    let mut kinds = Vec::new();
    for (_, v) in &gens {
        if h.is_grouplike(v) {
            match power_order(&h, v) {
                Some(o) => kinds.push(GenKind::Grouplike(o)),
                None => return SearchOutcome::Unsupported("grouplike generator of unbounded order".into()),
            }
            continue;
        }
        let one = h.one();
        let gamma = gh.verified.iter().find(|g| skew_space(&h, &one, g).map(|s| s.contains(v)).unwrap_or(false));
        let Some(gamma) = gamma else {
            return SearchOutcome::Unsupported("a generator is neither grouplike nor (1,g)-skew-primitive".into());
        };
        let word = (0..h.dim).find(|&l| h.basis_vec(l) == *gamma).map(|l| words[l].clone());
        match word {
            Some(w) if w.iter().all(|&g| h.is_grouplike(&gens[g].1)) => kinds.push(GenKind::Skew(w)),
            _ => return SearchOutcome::Unsupported("grouplike of a skew generator is not a generator word".into()),
        }
    }
    let skew_count = kinds.iter().filter(|k| matches!(k, GenKind::Skew(_))).count();
    if skew_count > 2 {
        return SearchOutcome::Unsupported(format!("{skew_count} non-grouplike generators (at most 2 supported)"));
    }
    let gk = match grouplikes(&k) {
        Ok(g) if g.complete() => g,
        Ok(_) => return SearchOutcome::Unsupported("target grouplikes not certified".into()),
        Err(e) => return SearchOutcome::Unsupported(e.to_string()),
    };
    let korders = gk.orders.clone().unwrap();
    let gl_idx: Vec<usize> =
        (0..gens.len()).filter(|&i| matches!(kinds[i], GenKind::Grouplike(_))).collect();
    let skew_idx: Vec<usize> = (0..gens.len()).filter(|&i| matches!(kinds[i], GenKind::Skew(_))).collect();
    let choices: Vec<Vec<usize>> = gl_idx
        .iter()
        .map(|&i| {
            let GenKind::Grouplike(o) = kinds[i] else { unreachable!() };
            (0..gk.verified.len()).filter(|&t| korders[t] == o).collect()
        })
        .collect();
    let mut s = Searcher { h: &h, k: &k, gens: gens.clone(), words: words.clone(), examined: 0, budget: opts.budget };
    let mut pick = vec![0usize; gl_idx.len()];
    if choices.iter().any(|c| c.is_empty()) {
        return SearchOutcome::NoneFound { examined: 0, exhausted_grid: true };
    }
    loop {
        let mut imgs: Vec<Option<Vector>> = vec![None; gens.len()];
        for (slot, &gi) in gl_idx.iter().enumerate() {
            imgs[gi] = Some(gk.verified[choices[slot][pick[slot]]].clone());
        }
        match s.check(&imgs) {
            None => return SearchOutcome::NoneFound { examined: s.examined, exhausted_grid: false },
            Some(true) => {
                match search_skew(&mut s, &kinds, &skew_idx, 0, &mut imgs, &grid) {
                    Step::Found => {
                        let witness = IsoWitness {
                            source: h.name.clone(),
                            target: k.name.clone(),
                            field_order: f.order(),
                            generator_images: gens
                                .iter()
                                .zip(&imgs)
                                .map(|((n, _), v)| (n.clone(), v.clone().unwrap()))
                                .collect(),
                        };
                        return SearchOutcome::Found { witness, examined: s.examined };
                    }
                    Step::OutOfBudget => {
                        return SearchOutcome::NoneFound { examined: s.examined, exhausted_grid: false }
                    }
                    Step::Exhausted => {}
                }
            }
            Some(false) => {}
        }
        // odometer over grouplike choices, last slot fastest
        let mut i = pick.len();
        loop {
            if i == 0 {
                return SearchOutcome::NoneFound { examined: s.examined, exhausted_grid: true };
            }
            i -= 1;
            pick[i] += 1;
            if pick[i] < choices[i].len() {
                break;
            }
            pick[i] = 0;
        }
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

fn search_skew(
    s: &mut Searcher,
    kinds: &[GenKind],
    skew_idx: &[usize],
    depth: usize,
    imgs: &mut Vec<Option<Vector>>,
    grid: &[FieldElem],
) -> Step {
    if depth == skew_idx.len() {
        return if s.finish(imgs) { Step::Found } else { Step::Exhausted };
    }
    let gi = skew_idx[depth];
    let GenKind::Skew(word) = &kinds[gi] else { unreachable!() };
    let k = s.k;
    let Some(gamma) = word_image(k, word, imgs) else { return Step::Exhausted };
    let one = k.one();
    let Ok(p) = skew_space(k, &one, &gamma) else { return Step::Exhausted };
    // complement of the trivial line k(1 − γ')
    let trivial = sub_vec(&one, &gamma);
    let mut e = Echelon::new(k.dim);
    if !is_zero_vec(&trivial) {
        e.insert(&trivial);
    }
    let comp: Vec<Vector> = p.basis().iter().filter(|v| e.insert(v)).cloned().collect();
    if comp.is_empty() {
        return Step::Exhausted;
    }
    let c = comp.len();
    let mut coef = vec![0usize; c];
    loop {
        // advance first (skips the all-zero tuple), last coordinate fastest
        let mut i = c;
        loop {
            if i == 0 {
                return Step::Exhausted;
            }
            i -= 1;
            coef[i] += 1;
            if coef[i] < grid.len() {
                break;
            }
            coef[i] = 0;
        }
        let mut v = zero_vec(&k.field, k.dim);
        for (j, &ci) in coef.iter().enumerate() {
            add_scaled(&mut v, &grid[ci], &comp[j]);
        }
        imgs[gi] = Some(v);
        match s.check(imgs) {
            None => return Step::OutOfBudget,
            Some(false) => continue,
            Some(true) => match search_skew(s, kinds, skew_idx, depth + 1, imgs, grid) {
                Step::Exhausted => continue,
                other => return other,
            },
        }
    }
}

/// Non-isomorphism evidence from invariants, listed in a fixed order. An
/// empty list means "indistinguishable by implemented invariants".
pub fn distinguish(h: &FinHopf, k: &FinHopf) -> Vec<String> {
    let mut out = Vec::new();
    if h.dim != k.dim {
        out.push(format!("dimensions differ ({} vs {})", h.dim, k.dim));
        return out;
    }
    let (h, k) = common_field(h, k, 1);
    let hd = crate::hopf::hopf_dual(&h);
    let kd = crate::hopf::hopf_dual(&k);
    let (sh, sk) = match (invariants::summarize(&h), invariants::summarize(&k)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => {
            out.push("invariant computation failed on one side".into());
            return out;
        }
    };
    let mut cmp = |what: &str, a: String, b: String| {
        if a != b {
            out.push(format!("{what} differ ({a} vs {b})"));
        }
    };
    cmp("semisimplicity", sh.is_semisimple.to_string(), sk.is_semisimple.to_string());
    cmp("coradical dims", sh.corad_dim.to_string(), sk.corad_dim.to_string());
    let (ch, ck) = (invariants::coradical(&hd).dim(), invariants::coradical(&kd).dim());
    cmp("dual coradical dims", ch.to_string(), ck.to_string());
    cmp("types (r,s)", format!("({},{})", sh.r, sh.s), format!("({},{})", sk.r, sk.s));
    cmp("antipode orders", sh.antipode_order.to_string(), sk.antipode_order.to_string());
    let dims = |v: &[usize]| v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
    cmp("filtration dims", dims(&sh.filtration.layer_dims), dims(&sk.filtration.layer_dims));
    let (fh, fk) = (invariants::coradical_filtration(&hd), invariants::coradical_filtration(&kd));
    cmp("dual filtration dims", dims(&fh.layer_dims), dims(&fk.layer_dims));
    cmp("skew-primitive dims", dims(&sh.skew_profile()), dims(&sk.skew_profile()));
    let h4 = |a: &FinHopf| match invariants::sub_h4(a) {
        Ok(SubH4::Embedding { .. }) => Some(true),
        Ok(SubH4::Absent { .. }) => Some(false),
        _ => None,
    };
    if let (Some(a), Some(b)) = (h4(&h), h4(&k)) {
        let says = |x: bool| if x { "contains H4" } else { "no H4" }.to_string();
        cmp("sub-H4 data", says(a), says(b));
    }
    out
}
