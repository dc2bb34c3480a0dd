//! Coradical invariants computed by exact linear algebra.
//!
//! Dual-side computations use the dual basis f_i of H*, in which the product
//! is f_i f_j = Σ_k Δ_k[(i,j)] f_k. The coradical is J(H*)^⊥ and J(H*) is the
//! radical of the trace form of the left regular representation (char 0).

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::hopf::FinHopf;
use crate::linalg::{is_zero_vec, kernel_of_rows, sub_vec, unit_vec, zero_vec, Echelon, LinearMap, Subspace, Vector};
use crate::scalars::FieldElem;

#[derive(Debug, Error)]
pub enum InvariantError {
    #[error("claimed element {0} is not grouplike")]
    NotGrouplike(usize),
    #[error("inconsistent grouplike data: {verified} verified but count bound is {bound}")]
    TooManyGrouplikes { verified: usize, bound: usize },
    #[error("argument is not a grouplike element")]
    BadArgument,
    #[error("Larson–Radford equivalence violated: {0}")]
    LarsonRadford(String),
}

/// Product in H* (dual basis coordinates).
pub fn dual_mul(h: &FinHopf, u: &[FieldElem], v: &[FieldElem]) -> Vector {
    let n = h.dim;
    let mut out = zero_vec(&h.field, n);
    for (k, row) in h.comult.iter().enumerate() {
        let mut acc = h.field.zero();
        for (p, c) in row {
            let (i, j) = (p / n, p % n);
            if u[i].is_zero() || v[j].is_zero() {
                continue;
            }
            acc.add_mul(c, &(&u[i] * &v[j]));
        }
        out[k] = acc;
    }
    out
}

/// Gram matrix of the trace form of the left regular representation of
/// an algebra with structure constants `c(i, j) -> Σ_k`.
fn trace_gram(n: usize, field: &crate::scalars::Field, table: Vec<Vec<Vector>>) -> Vec<Vector> {
    // t_k = tr L_{e_k} = Σ_i coefficient of e_i in e_k e_i
    let t: Vec<FieldElem> = (0..n)
        .map(|k| {
            let mut acc = field.zero();
            for i in 0..n {
                acc += &table[k][i][i];
            }
            acc
        })
        .collect();
    (0..n)
        .map(|a| (0..n).map(|b| crate::linalg::dot(&table[a][b], &t)).collect())
        .collect()
}

pub fn radical_of_dual(h: &FinHopf) -> Subspace {
    let n = h.dim;
    let mut table = vec![vec![zero_vec(&h.field, n); n]; n];
    for (k, row) in h.comult.iter().enumerate() {
        for (p, c) in row {
            table[p / n][p % n][k] += c;
        }
    }
    let gram = trace_gram(n, &h.field, table);
    kernel_of_rows(&h.field, n, gram)
}

/// Least k with J^k = 0, or None if J is not nilpotent.
pub fn nilpotency_index(h: &FinHopf, j: &Subspace) -> Option<usize> {
    let n = h.dim;
    let mut power = j.clone();
    for k in 1..=n + 1 {
        if power.is_zero() {
            return Some(k - 1);
        }
        let prods: Vec<Vector> = power
            .basis()
            .iter()
            .flat_map(|x| j.basis().iter().map(move |y| (x, y)))
            .map(|(x, y)| dual_mul(h, x, y))
            .collect();
        power = Subspace::span(&h.field, n, prods);
    }
    None
}

pub fn coradical(h: &FinHopf) -> Subspace {
    radical_of_dual(h).annihilator()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationReport {
    pub layer_dims: Vec<usize>,
    pub p_dims: Vec<usize>,
}

/// H_n = {h : (φ⊗ψ)Δh = 0 for φ ∈ H_0^⊥, ψ ∈ H_{n−1}^⊥}.
pub fn filtration_layers(h: &FinHopf) -> Vec<Subspace> {
    let n = h.dim;
    let f = &h.field;
    let j = radical_of_dual(h);
    let h0 = j.annihilator();
    let mut layers = vec![h0];
    while layers.last().unwrap().dim() < n {
        let perp = layers.last().unwrap().annihilator();
        let rows: Vec<Vector> = j
            .basis()
            .par_iter()
            .flat_map_iter(|phi| {
                perp.basis().iter().map(move |psi| {
                    let mut row = zero_vec(f, n);
                    for (i, d) in h.comult.iter().enumerate() {
                        let mut acc = f.zero();
                        for (p, c) in d {
                            let (a, b) = (p / n, p % n);
                            if phi[a].is_zero() || psi[b].is_zero() {
                                continue;
                            }
                            acc.add_mul(c, &(&phi[a] * &psi[b]));
                        }
                        row[i] = acc;
                    }
                    row
                })
            })
            .collect();
        let next = kernel_of_rows(f, n, rows);
        assert!(
            next.dim() > layers.last().unwrap().dim(),
            "coradical filtration stalled; input is not a verified Hopf algebra"
        );
        layers.push(next);
    }
    layers
}

pub fn coradical_filtration(h: &FinHopf) -> FiltrationReport {
    let layers = filtration_layers(h);
    let layer_dims: Vec<usize> = layers.iter().map(|l| l.dim()).collect();
    let p_dims = layer_dims.iter().map(|d| d - layer_dims[0]).collect();
    FiltrationReport { layer_dims, p_dims }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertStatus {
    Complete,
    Incomplete,
}

#[derive(Clone, Debug)]
pub struct GrouplikeReport {
    pub verified: Vec<Vector>,
    pub count_bound: usize,
    pub status: CertStatus,
    /// `table[a][b]` = index of verified[a]·verified[b]; only when complete.
    pub table: Option<Vec<Vec<usize>>>,
    pub orders: Option<Vec<usize>>,
}

impl GrouplikeReport {
    pub fn complete(&self) -> bool {
        self.status == CertStatus::Complete
    }

    pub fn identity_index(&self) -> Option<usize> {
        let t = self.table.as_ref()?;
        (0..t.len()).find(|&a| (0..t.len()).all(|b| t[a][b] == b))
    }

    pub fn position(&self, g: &[FieldElem]) -> Option<usize> {
        self.verified.iter().position(|v| v.as_slice() == g)
    }
}

/// Span of the two-sided ideal of H* generated by commutators.
fn commutator_ideal(h: &FinHopf) -> Subspace {
    let n = h.dim;
    let f = &h.field;
    let basis: Vec<Vector> = (0..n).map(|i| unit_vec(f, n, i)).collect();
    let mut e = Echelon::new(n);
    let mut queue = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let c = sub_vec(&dual_mul(h, &basis[i], &basis[j]), &dual_mul(h, &basis[j], &basis[i]));
            if e.insert(&c) {
                queue.push(c);
            }
        }
    }
    while let Some(v) = queue.pop() {
        for b in &basis {
            for w in [dual_mul(h, b, &v), dual_mul(h, &v, b)] {
                if e.insert(&w) {
                    queue.push(w);
                }
            }
        }
    }
    Subspace::span(f, n, e.rows().to_vec())
}

/// Number of characters of H* over the algebraic closure, i.e. an upper bound
/// for |G(H)| that is attained when the abelianization splits.
pub fn grouplike_count_bound(h: &FinHopf) -> usize {
    let n = h.dim;
    let f = &h.field;
    let c = commutator_ideal(h);
    let pivots: std::collections::BTreeSet<usize> = c.pivots().iter().copied().collect();
    let free: Vec<usize> = (0..n).filter(|i| !pivots.contains(i)).collect();
    let m = free.len();
    if m == 0 {
        return 0;
    }
    let table = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| {
                    let prod = dual_mul(h, &unit_vec(f, n, free[a]), &unit_vec(f, n, free[b]));
                    let red = c.reduce(&prod);
                    free.iter().map(|&i| red[i].clone()).collect()
                })
                .collect()
        })
        .collect();
    let gram = trace_gram(m, f, table);
    let mut e = Echelon::new(m);
    for row in gram {
        e.insert(&row);
    }
    e.rank()
}

pub fn grouplikes(h: &FinHopf) -> Result<GrouplikeReport, InvariantError> {
    grouplikes_of(h, &h.metadata.claimed_grouplikes)
}

pub fn grouplikes_of(h: &FinHopf, claimed: &[Vector]) -> Result<GrouplikeReport, InvariantError> {
    let mut verified: Vec<Vector> = Vec::new();
    for (i, g) in claimed.iter().enumerate() {
        if !h.is_grouplike(g) {
            return Err(InvariantError::NotGrouplike(i));
        }
        // S(g) must be a two-sided inverse
        let s = h.antipode_vec(g);
        if h.mul(&s, g) != h.unit || h.mul(g, &s) != h.unit {
            return Err(InvariantError::NotGrouplike(i));
        }
        if !verified.contains(g) {
            verified.push(g.clone());
        }
    }
    let count_bound = grouplike_count_bound(h);
    if verified.len() > count_bound {
        return Err(InvariantError::TooManyGrouplikes { verified: verified.len(), bound: count_bound });
    }
    if verified.len() < count_bound {
        return Ok(GrouplikeReport { verified, count_bound, status: CertStatus::Incomplete, table: None, orders: None });
    }
    let r = verified.len();
    let mut table = vec![vec![0usize; r]; r];
    for a in 0..r {
        for b in 0..r {
            let p = h.mul(&verified[a], &verified[b]);
            table[a][b] = verified.iter().position(|v| *v == p).ok_or(InvariantError::NotGrouplike(a))?;
        }
    }
    let id = verified.iter().position(|v| *v == h.unit).ok_or(InvariantError::NotGrouplike(0))?;
    let orders = (0..r)
        .map(|a| {
            let mut x = a;
            let mut k = 1;
            while x != id {
                x = table[x][a];
                k += 1;
            }
            k
        })
        .collect();
    Ok(GrouplikeReport { verified, count_bound, status: CertStatus::Complete, table: Some(table), orders: Some(orders) })
}

/// 𝒫_{h,g} = {x : Δx = x⊗h + g⊗x}.
pub fn skew_space(h: &FinHopf, hh: &[FieldElem], g: &[FieldElem]) -> Result<Subspace, InvariantError> {
    if !h.is_grouplike(hh) || !h.is_grouplike(g) {
        return Err(InvariantError::BadArgument);
    }
    let n = h.dim;
    let f = &h.field;
    let cols: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v = crate::hopf::to_dense(f, n * n, &h.comult[i]);
            for k in 0..n {
                if !hh[k].is_zero() {
                    v[i * n + k] -= &hh[k];
                }
                if !g[k].is_zero() {
                    v[k * n + i] -= &g[k];
                }
            }
            v
        })
        .collect();
    Ok(LinearMap::from_columns(n * n, cols).kernel(f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntipodeOrder {
    Finite(u64),
    ExceedsCap(u64),
}

impl std::fmt::Display for AntipodeOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AntipodeOrder::Finite(k) => write!(f, "{k}"),
            AntipodeOrder::ExceedsCap(c) => write!(f, "exceeds cap {c}"),
        }
    }
}

pub fn antipode_order(h: &FinHopf, cap: u64) -> AntipodeOrder {
    let s = h.antipode_map();
    let mut p = s.clone();
    for k in 1..=cap {
        if p.is_identity() {
            return AntipodeOrder::Finite(k);
        }
        p = s.compose(&p);
    }
    AntipodeOrder::ExceedsCap(cap)
}

pub fn trace_s2(h: &FinHopf) -> FieldElem {
    let s = h.antipode_map();
    s.compose(&s).trace(&h.field)
}

/// Certified count or the bound it failed to reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Count {
    pub value: usize,
    pub certified: bool,
}

impl std::fmt::Display for Count {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.certified {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{} (uncertified)", self.value)
        }
    }
}

#[derive(Clone, Debug)]
pub struct InvariantSummary {
    pub dim: usize,
    pub corad_dim: usize,
    pub r: Count,
    pub s: Count,
    pub antipode_order: AntipodeOrder,
    pub trace_s2: FieldElem,
    /// (h, g) indices into the verified grouplikes ↦ dim 𝒫_{h,g}.
    pub skew_table: BTreeMap<(usize, usize), usize>,
    pub is_semisimple: bool,
    pub filtration: FiltrationReport,
}

impl InvariantSummary {
    /// Multiset of skew-space dimensions (basis-independent).
    pub fn skew_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.skew_table.values().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn has_nontrivial_skew(&self) -> bool {
        self.skew_table.iter().any(|(&(a, b), &d)| if a == b { d >= 1 } else { d >= 2 })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let mut kv = |k: &str, v: String| {
            out.push_str(k);
            out.push('=');
            out.push_str(&v);
            out.push('\n');
        };
        kv("dim", self.dim.to_string());
        kv("corad_dim", self.corad_dim.to_string());
        kv("r", self.r.to_string());
        kv("s", self.s.to_string());
        kv("type", format!("({},{})", self.r.value, self.s.value));
        kv("antipode_order", self.antipode_order.to_string());
        kv("trace_S2", self.trace_s2.to_string());
        kv("semisimple", self.is_semisimple.to_string());
        kv("pointed", (self.r.certified && self.corad_dim == self.r.value).to_string());
        kv(
            "filtration",
            self.filtration.layer_dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","),
        );
        kv("nontrivial_skew", self.has_nontrivial_skew().to_string());
        let skew: Vec<String> =
            self.skew_table.iter().filter(|(_, &d)| d > 0).map(|((a, b), d)| format!("({a},{b}):{d}")).collect();
        kv("skew_dims", skew.join(" "));
        out
    }
}

/// All invariants, with the Larson–Radford equivalences asserted.
pub fn summarize(h: &FinHopf) -> Result<InvariantSummary, InvariantError> {
    let corad_dim = coradical(h).dim();
    let g = grouplikes(h)?;
    let dual = crate::hopf::hopf_dual(h);
    let gd = grouplikes(&dual)?;
    let trace = trace_s2(h);
    let is_semisimple = !trace.is_zero();
    if is_semisimple != (corad_dim == h.dim) {
        return Err(InvariantError::LarsonRadford(format!(
            "trace(S²) = {trace} but coradical dimension {corad_dim} of {}",
            h.dim
        )));
    }
    let dual_corad = coradical(&dual).dim();
    if is_semisimple != (dual_corad == h.dim) {
        return Err(InvariantError::LarsonRadford(format!(
            "trace(S²) = {trace} but dual coradical dimension {dual_corad} of {}",
            h.dim
        )));
    }
    let r = g.verified.len();
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|a| (0..r).map(move |b| (a, b))).collect();
    let skew_table = pairs
        .par_iter()
        .map(|&(a, b)| ((a, b), skew_space(h, &g.verified[a], &g.verified[b]).map(|s| s.dim()).unwrap_or(0)))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(InvariantSummary {
        dim: h.dim,
        corad_dim,
        r: Count { value: r, certified: g.complete() },
        s: Count { value: gd.verified.len(), certified: gd.complete() },
        antipode_order: antipode_order(h, 1000),
        trace_s2: trace,
        skew_table,
        is_semisimple,
        filtration: coradical_filtration(h),
    })
}

/// Claimed coradical profile: grouplike count and (d, m_d) blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimedProfile {
    pub g: usize,
    pub blocks: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct ProfileReport {
    pub certified: bool,
    pub corad_dim: usize,
    pub certified_dim: usize,
    pub problems: Vec<String>,
}

impl std::fmt::Display for ProfileReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.certified {
            write!(f, "profile certified: coradical dimension {}", self.corad_dim)
        } else if self.certified_dim < self.corad_dim {
            write!(f, "profile incomplete: coradical dimension {}, certified {}", self.corad_dim, self.certified_dim)?;
            for p in &self.problems {
                write!(f, "; {p}")?;
            }
            Ok(())
        } else {
            write!(f, "profile rejected: {}", self.problems.join("; "))
        }
    }
}

fn is_multiplicative_matrix(h: &FinHopf, e: &[Vec<Vector>]) -> bool {
    let d = e.len();
    let n = h.dim;
    for i in 0..d {
        for j in 0..d {
            if h.counit_of(&e[i][j]) != if i == j { h.field.one() } else { h.field.zero() } {
                return false;
            }
            let mut want = zero_vec(&h.field, n * n);
            for l in 0..d {
                for (a, x) in e[i][l].iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (b, y) in e[l][j].iter().enumerate() {
                        if !y.is_zero() {
                            want[a * n + b].add_mul(x, y);
                        }
                    }
                }
            }
            if h.comult_vec(&e[i][j]) != want {
                return false;
            }
        }
    }
    true
}

pub fn verify_coalgebra_profile(h: &FinHopf, claimed: &ClaimedProfile) -> ProfileReport {
    let corad_dim = coradical(h).dim();
    let mut problems = Vec::new();
    let mut vecs: Vec<Vector> = Vec::new();
    let gl: Vec<&Vector> = h.metadata.claimed_grouplikes.iter().filter(|g| h.is_grouplike(g)).collect();
    if gl.len() != h.metadata.claimed_grouplikes.len() {
        problems.push("a claimed grouplike fails Δg = g⊗g, ε(g) = 1".into());
    }
    vecs.extend(gl.iter().map(|v| (*v).clone()));
    if gl.len() != claimed.g {
        problems.push(format!("{} grouplikes verified, {} claimed", gl.len(), claimed.g));
    }
    let mut by_d: BTreeMap<usize, usize> = BTreeMap::new();
    for (k, mb) in h.metadata.claimed_matrix_bases.iter().enumerate() {
        if !is_multiplicative_matrix(h, mb) {
            problems.push(format!("matrix basis {k} is not multiplicative"));
            continue;
        }
        *by_d.entry(mb.len()).or_default() += 1;
        vecs.extend(mb.iter().flatten().cloned());
    }
    let want: BTreeMap<usize, usize> = claimed.blocks.iter().copied().filter(|&(_, m)| m > 0).collect();
    if want != by_d {
        problems.push(format!("verified blocks {by_d:?} differ from claimed {want:?}"));
    }
    let total = vecs.len();
    let span = Subspace::span(&h.field, h.dim, vecs);
    if span.dim() != total {
        problems.push("claimed grouplikes and matrix bases are linearly dependent".into());
    }
    let certified_dim = span.dim();
    if certified_dim != corad_dim {
        problems.push(format!("certified span {certified_dim} ≠ coradical {corad_dim}"));
    }
    ProfileReport { certified: problems.is_empty(), corad_dim, certified_dim, problems }
}

/// Profile read off the metadata (grouplikes and matrix bases by size).
pub fn metadata_profile(h: &FinHopf) -> ClaimedProfile {
    let mut by_d: BTreeMap<usize, usize> = BTreeMap::new();
    for mb in &h.metadata.claimed_matrix_bases {
        *by_d.entry(mb.len()).or_default() += 1;
    }
    ClaimedProfile { g: h.metadata.claimed_grouplikes.len(), blocks: by_d.into_iter().collect() }
}

/// Sub-Hopf algebras isomorphic to H₄: for γ of order 2 the candidates for
/// the image of x live in L = {y ∈ 𝒫_{1,γ} : γy + yγ = 0} and need y² = 0.
#[derive(Clone, Debug)]
pub enum SubH4 {
    /// Images of g and x.
    Embedding { g: Vector, x: Vector },
    /// For each order-2 grouplike: dim L, and whether y² ≠ 0 was used.
    Absent { checks: Vec<(usize, usize, bool)> },
    Undecided(String),
}

pub fn involution_anticommutant(h: &FinHopf, gamma: &[FieldElem]) -> Result<Subspace, InvariantError> {
    let n = h.dim;
    let one = h.one();
    let p = skew_space(h, &one, gamma)?;
    // y ↦ γy + yγ restricted to 𝒫_{1,γ}
    let imgs: Vec<Vector> = p
        .basis()
        .iter()
        .map(|y| crate::linalg::add_vec(&h.mul(gamma, y), &h.mul(y, gamma)))
        .collect();
    let m = imgs.len();
    let map = LinearMap::from_columns(n, imgs);
    let ker = map.kernel(&h.field);
    let vecs = ker.basis().iter().map(|c| {
        let mut v = zero_vec(&h.field, n);
        for (i, a) in c.iter().enumerate().take(m) {
            crate::linalg::add_scaled(&mut v, a, &p.basis()[i]);
        }
        v
    });
    Ok(Subspace::span(&h.field, n, vecs.collect::<Vec<_>>()))
}

pub fn sub_h4(h: &FinHopf) -> Result<SubH4, InvariantError> {
    let g = grouplikes(h)?;
    if !g.complete() {
        return Ok(SubH4::Undecided("grouplike group not certified".into()));
    }
    let orders = g.orders.clone().unwrap();
    let mut checks = Vec::new();
    let mut undecided = None;
    for (k, gamma) in g.verified.iter().enumerate() {
        if orders[k] != 2 {
            continue;
        }
        let l = involution_anticommutant(h, gamma)?;
        let basis = l.basis().to_vec();
        // try basis vectors and pairwise sums/differences before giving up
        let mut cands: Vec<Vector> = basis.clone();
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                cands.push(crate::linalg::add_vec(&basis[i], &basis[j]));
                cands.push(sub_vec(&basis[i], &basis[j]));
            }
        }
        for y in cands {
            if is_zero_vec(&h.mul(&y, &y)) {
                return Ok(SubH4::Embedding { g: gamma.clone(), x: y });
            }
        }
        match basis.len() {
            0 => checks.push((k, 0, false)),
            1 => checks.push((k, 1, true)),
            d => undecided = Some(format!("grouplike {k}: dim L = {d}, no square-zero element on the grid")),
        }
    }
    Ok(match undecided {
        Some(msg) => SubH4::Undecided(msg),
        None => SubH4::Absent { checks },
    })
}
