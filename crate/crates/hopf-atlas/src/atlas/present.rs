//! Building structure constants from presentations.
//!
//! The pointed families here are all quotients of a skew group algebra: an
//! abelian group Γ = C_{o_1} × … × C_{o_r} together with generators x_j that
//! satisfy g_i x_j = χ_j(g_i) x_j g_i, x_k x_j = q_{kj} x_j x_k (k > j) and
//! x_j^{n_j} = c_j ∈ kΓ. The monomial basis is γ·x_1^{e_1}⋯x_s^{e_s}, ordered
//! lexicographically in (γ exponents, e).

use std::collections::BTreeMap;

use crate::hopf::{to_dense, to_sparse, verify_hopf, FinHopf, Metadata, Representation, SparseVec};
use crate::linalg::{unit_vec, zero_vec, Vector};
use crate::scalars::{Field, FieldElem};

use super::AtlasError;

pub type GroupElem = Vec<u32>;

pub struct SkewGroupAlgebra {
    pub field: Field,
    pub orders: Vec<u32>,
    /// chi[j][i] = χ_j(g_i).
    pub chi: Vec<Vec<FieldElem>>,
    pub nil: Vec<usize>,
    /// x_j^{n_j} as a combination of group elements.
    pub power: Vec<Vec<(GroupElem, FieldElem)>>,
    /// braid[k][j] (k > j): x_k x_j = braid[k][j] · x_j x_k.
    pub braid: Vec<Vec<FieldElem>>,
}

type Term = (GroupElem, Vec<usize>, FieldElem);

impl SkewGroupAlgebra {
    pub fn group_size(&self) -> usize {
        self.orders.iter().map(|&o| o as usize).product()
    }

    fn x_size(&self) -> usize {
        self.nil.iter().product()
    }

    pub fn dim(&self) -> usize {
        self.group_size() * self.x_size()
    }

    pub fn group_index(&self, g: &[u32]) -> usize {
        let mut idx = 0usize;
        for (e, &o) in g.iter().zip(&self.orders) {
            idx = idx * o as usize + (*e % o) as usize;
        }
        idx
    }

    pub fn group_elem(&self, mut idx: usize) -> GroupElem {
        let mut out = vec![0u32; self.orders.len()];
        for (slot, &o) in out.iter_mut().zip(&self.orders).rev() {
            *slot = (idx % o as usize) as u32;
            idx /= o as usize;
        }
        out
    }

    fn x_index(&self, e: &[usize]) -> usize {
        let mut idx = 0usize;
        for (a, &n) in e.iter().zip(&self.nil) {
            idx = idx * n + a;
        }
        idx
    }

    fn x_exps(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0usize; self.nil.len()];
        for (slot, &n) in out.iter_mut().zip(&self.nil).rev() {
            *slot = idx % n;
            idx /= n;
        }
        out
    }

    pub fn index(&self, g: &[u32], e: &[usize]) -> usize {
        self.group_index(g) * self.x_size() + self.x_index(e)
    }

    pub fn decompose(&self, idx: usize) -> (GroupElem, Vec<usize>) {
        let xs = self.x_size();
        (self.group_elem(idx / xs), self.x_exps(idx % xs))
    }

    fn add_group(&self, a: &[u32], b: &[u32]) -> GroupElem {
        a.iter().zip(b).zip(&self.orders).map(|((x, y), o)| (x + y) % o).collect()
    }

    /// χ_j(γ)^k for a group element γ and any integer k.
    fn chi_pow(&self, j: usize, g: &[u32], k: i64) -> FieldElem {
        let mut acc = self.field.one();
        for (i, &gi) in g.iter().enumerate() {
            if gi == 0 || k == 0 {
                continue;
            }
            let c = self.chi[j][i].powi(k * gi as i64).expect("characters take unit values");
            acc = &acc * &c;
        }
        acc
    }

    fn product_terms(&self, (g, e): (&[u32], &[usize]), (h, f): (&[u32], &[usize])) -> Vec<Term> {
        let s = self.nil.len();
        let mut c = self.field.one();
        // move x^e past h
        for j in 0..s {
            if e[j] > 0 {
                c = &c * &self.chi_pow(j, h, -(e[j] as i64));
            }
        }
        // move x_j^{f_j} past x_k^{e_k} for k > j
        for j in 0..s {
            for k in (j + 1)..s {
                let p = e[k] * f[j];
                if p > 0 {
                    c = &c * &self.braid[k][j].pow(p as u64);
                }
            }
        }
        let gh = self.add_group(g, h);
        let a: Vec<usize> = e.iter().zip(f).map(|(x, y)| x + y).collect();
        let mut done = Vec::new();
        let mut todo: Vec<Term> = vec![(gh, a, c)];
        while let Some((g, a, c)) = todo.pop() {
            let Some(j) = (0..s).find(|&j| a[j] >= self.nil[j]) else {
                done.push((g, a, c));
                continue;
            };
            for (lam, coeff) in &self.power[j] {
                let mut c2 = &c * coeff;
                for i in 0..j {
                    if a[i] > 0 {
                        c2 = &c2 * &self.chi_pow(i, lam, -(a[i] as i64));
                    }
                }
                let mut a2 = a.clone();
                a2[j] -= self.nil[j];
                todo.push((self.add_group(&g, lam), a2, c2));
            }
        }
        done
    }

    pub fn mult_table(&self) -> Vec<SparseVec> {
        let n = self.dim();
        let mut out = Vec::with_capacity(n * n);
        let parts: Vec<(GroupElem, Vec<usize>)> = (0..n).map(|i| self.decompose(i)).collect();
        for (g, e) in &parts {
            for (h, f) in &parts {
                let mut acc: BTreeMap<usize, FieldElem> = BTreeMap::new();
                for (g2, a, c) in self.product_terms((g, e), (h, f)) {
                    let k = self.index(&g2, &a);
                    let slot = acc.entry(k).or_insert_with(|| self.field.zero());
                    *slot += &c;
                }
                out.push(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
            }
        }
        out
    }

    /// Generators g_1..g_r, x_1..x_s and the word of every basis element.
    pub fn generators(&self, names: &[&str]) -> (Vec<(String, Vector)>, Vec<Vec<usize>>) {
        let n = self.dim();
        let r = self.orders.len();
        let s = self.nil.len();
        let mut gens = Vec::new();
        for i in 0..r {
            let mut g = vec![0u32; r];
            g[i] = 1;
            gens.push((names[i].to_string(), unit_vec(&self.field, n, self.index(&g, &vec![0; s]))));
        }
        for j in 0..s {
            let mut e = vec![0usize; s];
            e[j] = 1;
            gens.push((names[r + j].to_string(), unit_vec(&self.field, n, self.index(&vec![0; r], &e))));
        }
        let words = (0..n)
            .map(|k| {
                let (g, e) = self.decompose(k);
                let mut w = Vec::new();
                for (i, &gi) in g.iter().enumerate() {
                    w.extend(std::iter::repeat(i).take(gi as usize));
                }
                for (j, &ej) in e.iter().enumerate() {
                    w.extend(std::iter::repeat(r + j).take(ej));
                }
                w
            })
            .collect();
        (gens, words)
    }
}

/// Everything needed to assemble a verified FinHopf from generator data.
pub struct Assembly {
    pub name: String,
    pub field: Field,
    pub dim: usize,
    pub mult: Vec<SparseVec>,
    pub generators: Vec<(String, Vector)>,
    pub words: Vec<Vec<usize>>,
    /// Δ of each generator over the flattened pair index.
    pub gen_comult: Vec<Vector>,
    pub gen_counit: Vec<FieldElem>,
    pub gen_antipode: Vec<Vector>,
    pub grouplikes: Vec<Vector>,
    pub matrix_bases: Vec<Vec<Vec<Vector>>>,
    /// Representations given by the matrices of the generators.
    pub reps: Vec<Vec<Vec<Vec<FieldElem>>>>,
}

fn mul_with(mult: &[SparseVec], n: usize, a: &[FieldElem], b: &[FieldElem], field: &Field) -> Vector {
    let mut out = zero_vec(field, n);
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let xy = x * y;
            for (k, c) in &mult[i * n + j] {
                out[*k].add_mul(&xy, c);
            }
        }
    }
    out
}

fn mat_mul(a: &[Vec<FieldElem>], b: &[Vec<FieldElem>], field: &Field) -> Vec<Vec<FieldElem>> {
    let d = a.len();
    let mut out = vec![vec![field.zero(); d]; d];
    for r in 0..d {
        for c in 0..d {
            let mut acc = field.zero();
            for k in 0..d {
                acc.add_mul(&a[r][k], &b[k][c]);
            }
            out[r][c] = acc;
        }
    }
    out
}

fn mat_id(d: usize, field: &Field) -> Vec<Vec<FieldElem>> {
    (0..d).map(|r| (0..d).map(|c| if r == c { field.one() } else { field.zero() }).collect()).collect()
}

/// Extends generator matrices along the words and checks multiplicativity.
pub fn extend_representation(
    field: &Field,
    mult: &[SparseVec],
    n: usize,
    generators: &[(String, Vector)],
    words: &[Vec<usize>],
    gen_mats: &[Vec<Vec<FieldElem>>],
) -> Option<Representation> {
    let d = gen_mats.first().map(|m| m.len()).unwrap_or(1);
    let images: Vec<Vec<Vec<FieldElem>>> = words
        .iter()
        .map(|w| w.iter().fold(mat_id(d, field), |acc, &g| mat_mul(&acc, &gen_mats[g], field)))
        .collect();
    for (gi, (_, gv)) in generators.iter().enumerate() {
        for k in 0..n {
            let prod = mul_with(mult, n, gv, &unit_vec(field, n, k), field);
            let mut lhs = vec![vec![field.zero(); d]; d];
            for (l, c) in prod.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for r in 0..d {
                    for cc in 0..d {
                        lhs[r][cc].add_mul(c, &images[l][r][cc]);
                    }
                }
            }
            if lhs != mat_mul(&gen_mats[gi], &images[k], field) {
                return None;
            }
        }
    }
    Some(Representation { dim: d, images })
}

/// All characters whose generator values lie in {0} ∪ μ_N.
pub fn discover_characters(
    field: &Field,
    mult: &[SparseVec],
    n: usize,
    generators: &[(String, Vector)],
    words: &[Vec<usize>],
) -> Vec<Representation> {
    let mut candidates = vec![field.zero()];
    candidates.extend(field.roots_of_unity());
    let m = generators.len();
    let mut out = Vec::new();
    let mut choice = vec![0usize; m];
    loop {
        let mats: Vec<Vec<Vec<FieldElem>>> =
            choice.iter().map(|&c| vec![vec![candidates[c].clone()]]).collect();
        if let Some(rep) = extend_representation(field, mult, n, generators, words, &mats) {
            out.push(rep);
        }
        // odometer
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < candidates.len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

fn tensor_mul_with(mult: &[SparseVec], n: usize, x: &[FieldElem], y: &[FieldElem], field: &Field) -> Vector {
    let xs = to_sparse(x);
    let ys = to_sparse(y);
    let mut out = zero_vec(field, n * n);
    for (p, c) in &xs {
        for (q, d) in &ys {
            let cd = c * d;
            for (u, s) in &mult[(p / n) * n + q / n] {
                let cds = &cd * s;
                for (v, t) in &mult[(p % n) * n + q % n] {
                    out[u * n + v].add_mul(&cds, t);
                }
            }
        }
    }
    out
}

pub fn assemble(a: Assembly) -> Result<FinHopf, AtlasError> {
    let n = a.dim;
    let f = &a.field;
    // the words must reproduce the basis exactly
    let one = {
        let mut v = zero_vec(f, n);
        let w0 = a.words.iter().position(|w| w.is_empty()).ok_or_else(|| {
            AtlasError::Construction(format!("{}: no empty word for the unit", a.name))
        })?;
        v[w0] = f.one();
        v
    };
    for (k, w) in a.words.iter().enumerate() {
        let v = w.iter().fold(one.clone(), |acc, &g| mul_with(&a.mult, n, &acc, &a.generators[g].1, f));
        if v != unit_vec(f, n, k) {
            return Err(AtlasError::Construction(format!("{}: word of basis element {k} is wrong", a.name)));
        }
    }
    let mut one_one = zero_vec(f, n * n);
    for (i, x) in one.iter().enumerate() {
        for (j, y) in one.iter().enumerate() {
            one_one[i * n + j] = x * y;
        }
    }
    let mut comult = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    let mut antipode = Vec::with_capacity(n);
    for w in &a.words {
        let d = w.iter().fold(one_one.clone(), |acc, &g| tensor_mul_with(&a.mult, n, &acc, &a.gen_comult[g], f));
        comult.push(to_sparse(&d));
        let e = w.iter().fold(f.one(), |acc, &g| &acc * &a.gen_counit[g]);
        counit.push(e);
        let s = w.iter().rev().fold(one.clone(), |acc, &g| mul_with(&a.mult, n, &acc, &a.gen_antipode[g], f));
        antipode.push(to_sparse(&s));
    }
    let mut representations = discover_characters(f, &a.mult, n, &a.generators, &a.words);
    for mats in &a.reps {
        let rep = extend_representation(f, &a.mult, n, &a.generators, &a.words, mats).ok_or_else(|| {
            AtlasError::Construction(format!("{}: declared representation is not multiplicative", a.name))
        })?;
        representations.push(rep);
    }
    let h = FinHopf {
        name: a.name.clone(),
        dim: n,
        field: f.clone(),
        mult: a.mult,
        unit: one,
        comult,
        counit,
        antipode,
        metadata: Metadata {
            claimed_grouplikes: a.grouplikes,
            claimed_generators: a.generators,
            monomials: a.words,
            claimed_matrix_bases: a.matrix_bases,
            representations,
        },
    };
    let report = verify_hopf(&h).map_err(|e| AtlasError::Construction(e.to_string()))?;
    if !report.ok() {
        return Err(AtlasError::Construction(format!("{}: axiom failure: {report}", a.name)));
    }
    Ok(h)
}

/// Δ(v) = v⊗w1 + w2⊗v style helper: Σ c · (a ⊗ b).
pub fn tensor_of(field: &Field, n: usize, terms: &[(FieldElem, Vector, Vector)]) -> Vector {
    let mut out = zero_vec(field, n * n);
    for (c, a, b) in terms {
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let cx = c * x;
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i * n + j].add_mul(&cx, y);
                }
            }
        }
    }
    out
}

pub fn dense(field: &Field, n: usize, v: &SparseVec) -> Vector {
    to_dense(field, n, v)
}
