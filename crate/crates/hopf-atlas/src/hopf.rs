//! Finite-dimensional Hopf algebras as sparse structure-constant tensors.
//!
//! Conventions: `mult[i*n + j]` is b_i·b_j, `comult[i]` is Δ(b_i) over the
//! row-major pair index j*n + k for b_j⊗b_k, and `antipode[i]` is S(b_i).

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::linalg::{is_zero_vec, unit_vec, zero_vec, LinearMap, Subspace, Vector};
use crate::scalars::{lcm_order, Field, FieldElem};

pub type SparseVec = Vec<(usize, FieldElem)>;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0}")]
    Lemma(String),
    #[error("not a Hopf morphism: {0}")]
    NotMorphism(String),
}

/// A finite-dimensional representation given on every basis element.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub dim: usize,
    /// `images[k][r][c]`: entry (r, c) of the matrix of b_k.
    pub images: Vec<Vec<Vec<FieldElem>>>,
}

/// Declared (not discovered) data; every claim is checked by `invariants`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Metadata {
    pub claimed_grouplikes: Vec<Vector>,
    /// Distinguished algebra generators.
    pub claimed_generators: Vec<(String, Vector)>,
    /// For each basis element, a word in the generators whose product is
    /// exactly that basis element (empty list means no presentation data).
    pub monomials: Vec<Vec<usize>>,
    /// Multiplicative matrices e_ij (d×d) spanning simple subcoalgebras.
    pub claimed_matrix_bases: Vec<Vec<Vec<Vector>>>,
    /// Representations of the algebra; characters are the 1-dimensional ones.
    /// Under duality these become grouplikes / matrix-like bases of H*.
    pub representations: Vec<Representation>,
}

#[derive(Clone, Debug)]
pub struct FinHopf {
    pub name: String,
    pub dim: usize,
    pub field: Field,
    pub mult: Vec<SparseVec>,
    pub unit: Vector,
    pub comult: Vec<SparseVec>,
    pub counit: Vector,
    pub antipode: Vec<SparseVec>,
    pub metadata: Metadata,
}

pub fn to_sparse(v: &[FieldElem]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

pub fn to_dense(field: &Field, n: usize, v: &SparseVec) -> Vector {
    let mut out = zero_vec(field, n);
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

/// Accumulator keyed by a flattened index; zeros are dropped on finish.
#[derive(Default)]
struct Acc(BTreeMap<usize, FieldElem>);

impl Acc {
    fn add(&mut self, k: usize, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&k) {
            Some(x) => *x += &c,
            None => {
                self.0.insert(k, c);
            }
        }
    }
    fn finish(self) -> SparseVec {
        self.0.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub indices: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub failures: Vec<AxiomFailure>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed_axioms(&self) -> Vec<&'static str> {
        let mut v: Vec<&'static str> = self.failures.iter().map(|f| f.axiom).collect();
        v.dedup();
        v
    }

    fn push(&mut self, axiom: &'static str, indices: Vec<usize>) {
        self.failures.push(AxiomFailure { axiom, indices });
    }

    fn extend(&mut self, other: Report) {
        self.failures.extend(other.failures);
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.ok() {
            return f.write_str("ok");
        }
        for (i, fl) in self.failures.iter().take(8).enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{} at {:?}", fl.axiom, fl.indices)?;
        }
        if self.failures.len() > 8 {
            write!(f, "; … {} failures total", self.failures.len())?;
        }
        Ok(())
    }
}

impl FinHopf {
    pub fn check_shapes(&self) -> Result<(), HopfError> {
        let n = self.dim;
        let bad = |s: String| Err(HopfError::Shape(s));
        if n == 0 {
            return bad("dimension must be positive".into());
        }
        if self.mult.len() != n * n {
            return bad(format!("mult has {} rows, expected {}", self.mult.len(), n * n));
        }
        if self.comult.len() != n || self.antipode.len() != n {
            return bad("comult/antipode must have one entry per basis element".into());
        }
        if self.unit.len() != n || self.counit.len() != n {
            return bad("unit/counit must have length dim".into());
        }
        let mut orders = Vec::new();
        for row in &self.mult {
            for (k, c) in row {
                if *k >= n {
                    return bad(format!("mult index {k} out of range"));
                }
                orders.push(c.order());
            }
        }
        for row in &self.comult {
            for (k, c) in row {
                if *k >= n * n {
                    return bad(format!("comult index {k} out of range"));
                }
                orders.push(c.order());
            }
        }
        for row in &self.antipode {
            for (k, c) in row {
                if *k >= n {
                    return bad(format!("antipode index {k} out of range"));
                }
                orders.push(c.order());
            }
        }
        orders.extend(self.unit.iter().chain(&self.counit).map(|c| c.order()));
        if orders.iter().any(|&o| o != self.field.order()) {
            return bad("coefficient outside the declared cyclotomic field".into());
        }
        Ok(())
    }

    pub fn one(&self) -> Vector {
        self.unit.clone()
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        unit_vec(&self.field, self.dim, i)
    }

    pub fn zero_vec(&self) -> Vector {
        zero_vec(&self.field, self.dim)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i * self.dim + j]
    }

    pub fn mul(&self, a: &[FieldElem], b: &[FieldElem]) -> Vector {
        let mut out = self.zero_vec();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.mul_basis(i, j) {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[FieldElem], e: usize) -> Vector {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn comult_vec(&self, a: &[FieldElem]) -> Vector {
        let n = self.dim;
        let mut out = zero_vec(&self.field, n * n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (p, c) in &self.comult[i] {
                out[*p].add_mul(x, c);
            }
        }
        out
    }

    pub fn counit_of(&self, a: &[FieldElem]) -> FieldElem {
        crate::linalg::dot(&self.counit, a)
    }

    pub fn antipode_vec(&self, a: &[FieldElem]) -> Vector {
        let mut out = self.zero_vec();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, c) in &self.antipode[i] {
                out[*k].add_mul(x, c);
            }
        }
        out
    }

    pub fn antipode_map(&self) -> LinearMap {
        let cols =
            (0..self.dim).map(|i| to_dense(&self.field, self.dim, &self.antipode[i])).collect();
        LinearMap::from_columns(self.dim, cols)
    }

    /// Product in H⊗H of two tensors given over the flattened pair index.
    pub fn tensor_mul(&self, x: &[FieldElem], y: &[FieldElem]) -> Vector {
        let n = self.dim;
        let xs = to_sparse(x);
        let ys = to_sparse(y);
        let mut acc = Acc::default();
        for (p, c) in &xs {
            for (q, d) in &ys {
                let cd = c * d;
                let (a, b) = (p / n, p % n);
                let (a2, b2) = (q / n, q % n);
                for (u, s) in self.mul_basis(a, a2) {
                    for (v, t) in self.mul_basis(b, b2) {
                        acc.add(u * n + v, &(&cd * s) * t);
                    }
                }
            }
        }
        to_dense(&self.field, n * n, &acc.finish())
    }

    pub fn is_grouplike(&self, g: &[FieldElem]) -> bool {
        if is_zero_vec(g) || !self.counit_of(g).is_one() {
            return false;
        }
        let n = self.dim;
        let d = self.comult_vec(g);
        (0..n).all(|j| (0..n).all(|k| d[j * n + k] == &g[j] * &g[k]))
    }

    /// Equality of all tensors (names and metadata ignored).
    pub fn same_tensors(&self, other: &FinHopf) -> bool {
        self.dim == other.dim
            && self.field == other.field
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }

    /// Re-express every coefficient in Q(ζ_M), N | M.
    pub fn embed(&self, m: u32) -> FinHopf {
        if m == self.field.order() {
            return self.clone();
        }
        let target = Field::new(m);
        let e = |c: &FieldElem| c.embed_into(&target);
        let ev = |v: &Vector| v.iter().map(e).collect::<Vector>();
        let es = |v: &SparseVec| v.iter().map(|(i, c)| (*i, e(c))).collect::<SparseVec>();
        let md = &self.metadata;
        FinHopf {
            name: self.name.clone(),
            dim: self.dim,
            field: target.clone(),
            mult: self.mult.iter().map(es).collect(),
            unit: ev(&self.unit),
            comult: self.comult.iter().map(es).collect(),
            counit: ev(&self.counit),
            antipode: self.antipode.iter().map(es).collect(),
            metadata: Metadata {
                claimed_grouplikes: md.claimed_grouplikes.iter().map(ev).collect(),
                claimed_generators: md
                    .claimed_generators
                    .iter()
                    .map(|(s, v)| (s.clone(), ev(v)))
                    .collect(),
                monomials: md.monomials.clone(),
                claimed_matrix_bases: md
                    .claimed_matrix_bases
                    .iter()
                    .map(|mb| mb.iter().map(|row| row.iter().map(ev).collect()).collect())
                    .collect(),
                representations: md
                    .representations
                    .iter()
                    .map(|r| Representation {
                        dim: r.dim,
                        images: r
                            .images
                            .iter()
                            .map(|m| m.iter().map(|row| row.iter().map(e).collect()).collect())
                            .collect(),
                    })
                    .collect(),
            },
        }
    }
}

fn sparse_eq(a: SparseVec, b: SparseVec) -> bool {
    a == b
}

/// Exhaustive check of the bialgebra axioms.
pub fn verify_bialgebra(h: &FinHopf) -> Result<Report, HopfError> {
    h.check_shapes()?;
    let n = h.dim;
    let f = &h.field;
    let one = to_sparse(&h.unit);

    let per_i: Vec<Report> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut r = Report::default();
            // associativity
            for j in 0..n {
                for k in 0..n {
                    let mut lhs = Acc::default();
                    for (l, c) in h.mul_basis(i, j) {
                        for (t, d) in h.mul_basis(*l, k) {
                            lhs.add(*t, c * d);
                        }
                    }
                    let mut rhs = Acc::default();
                    for (l, c) in h.mul_basis(j, k) {
                        for (t, d) in h.mul_basis(i, *l) {
                            rhs.add(*t, c * d);
                        }
                    }
                    if !sparse_eq(lhs.finish(), rhs.finish()) {
                        r.push("associativity", vec![i, j, k]);
                    }
                }
            }
            // unit laws
            let bi = vec![(i, f.one())];
            let mut left = Acc::default();
            let mut right = Acc::default();
            for (u, c) in &one {
                for (t, d) in h.mul_basis(*u, i) {
                    left.add(*t, c * d);
                }
                for (t, d) in h.mul_basis(i, *u) {
                    right.add(*t, c * d);
                }
            }
            if left.finish() != bi || right.finish() != bi {
                r.push("unit", vec![i]);
            }
            // coassociativity
            let mut l3 = Acc::default();
            let mut r3 = Acc::default();
            for (p, c) in &h.comult[i] {
                let (j, k) = (p / n, p % n);
                for (q, d) in &h.comult[j] {
                    l3.add(q * n + k, c * d);
                }
                for (q, d) in &h.comult[k] {
                    r3.add(j * n * n + q, c * d);
                }
            }
            if l3.finish() != r3.finish() {
                r.push("coassociativity", vec![i]);
            }
            // counit laws
            let mut lc = Acc::default();
            let mut rc = Acc::default();
            for (p, c) in &h.comult[i] {
                let (j, k) = (p / n, p % n);
                lc.add(k, &h.counit[j] * c);
                rc.add(j, c * &h.counit[k]);
            }
            if lc.finish() != bi || rc.finish() != bi {
                r.push("counit", vec![i]);
            }
            // Δ and ε are algebra maps
            for j in 0..n {
                let mut lhs = Acc::default();
                for (l, c) in h.mul_basis(i, j) {
                    for (p, d) in &h.comult[*l] {
                        lhs.add(*p, c * d);
                    }
                }
                let mut rhs = Acc::default();
                for (p, c) in &h.comult[i] {
                    let (a, b) = (p / n, p % n);
                    for (q, d) in &h.comult[j] {
                        let (a2, b2) = (q / n, q % n);
                        let cd = c * d;
                        for (u, s) in h.mul_basis(a, a2) {
                            let cds = &cd * s;
                            for (v, t) in h.mul_basis(b, b2) {
                                rhs.add(u * n + v, &cds * t);
                            }
                        }
                    }
                }
                if lhs.finish() != rhs.finish() {
                    r.push("comult-multiplicative", vec![i, j]);
                }
                let mut e = f.zero();
                for (l, c) in h.mul_basis(i, j) {
                    e.add_mul(c, &h.counit[*l]);
                }
                if e != &h.counit[i] * &h.counit[j] {
                    r.push("counit-multiplicative", vec![i, j]);
                }
            }
            r
        })
        .collect();
    let mut report = Report::default();
    for r in per_i {
        report.extend(r);
    }
    // Δ(1) = 1⊗1 and ε(1) = 1
    let d1 = h.comult_vec(&h.unit);
    let mut oo = zero_vec(f, n * n);
    for (i, a) in h.unit.iter().enumerate() {
        for (j, b) in h.unit.iter().enumerate() {
            oo[i * n + j] = a * b;
        }
    }
    if d1 != oo {
        report.push("comult-unital", vec![]);
    }
    if !h.counit_of(&h.unit).is_one() {
        report.push("counit-unital", vec![]);
    }
    Ok(report)
}

/// m∘(S⊗id)∘Δ = η∘ε = m∘(id⊗S)∘Δ on every basis element.
pub fn verify_antipode(h: &FinHopf) -> Result<Report, HopfError> {
    h.check_shapes()?;
    let n = h.dim;
    let per_i: Vec<Report> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut r = Report::default();
            let mut left = Acc::default();
            let mut right = Acc::default();
            for (p, c) in &h.comult[i] {
                let (j, k) = (p / n, p % n);
                for (s, d) in &h.antipode[j] {
                    for (t, e) in h.mul_basis(*s, k) {
                        left.add(*t, &(c * d) * e);
                    }
                }
                for (s, d) in &h.antipode[k] {
                    for (t, e) in h.mul_basis(j, *s) {
                        right.add(*t, &(c * d) * e);
                    }
                }
            }
            let mut want = Acc::default();
            for (t, u) in h.unit.iter().enumerate() {
                want.add(t, &h.counit[i] * u);
            }
            let want = want.finish();
            if left.finish() != want {
                r.push("antipode-left", vec![i]);
            }
            if right.finish() != want {
                r.push("antipode-right", vec![i]);
            }
            r
        })
        .collect();
    let mut report = Report::default();
    for r in per_i {
        report.extend(r);
    }
    Ok(report)
}

/// Both checks; the antipode is only examined once the bialgebra passes.
pub fn verify_hopf(h: &FinHopf) -> Result<Report, HopfError> {
    let b = verify_bialgebra(h)?;
    if !b.ok() {
        return Ok(b);
    }
    verify_antipode(h)
}

/// Dual Hopf algebra in the dual basis f_i: every tensor is transposed.
pub fn hopf_dual(h: &FinHopf) -> FinHopf {
    let n = h.dim;
    let f = &h.field;
    let mut mult: Vec<Acc> = (0..n * n).map(|_| Acc::default()).collect();
    for (k, row) in h.comult.iter().enumerate() {
        for (p, c) in row {
            mult[*p].add(k, c.clone());
        }
    }
    let mut comult: Vec<Acc> = (0..n).map(|_| Acc::default()).collect();
    for (p, row) in h.mult.iter().enumerate() {
        for (k, c) in row {
            comult[*k].add(p, c.clone());
        }
    }
    let mut antipode: Vec<Acc> = (0..n).map(|_| Acc::default()).collect();
    for (j, row) in h.antipode.iter().enumerate() {
        for (i, c) in row {
            antipode[*i].add(j, c.clone());
        }
    }
    FinHopf {
        name: dual_name(&h.name),
        dim: n,
        field: f.clone(),
        mult: mult.into_iter().map(Acc::finish).collect(),
        unit: h.counit.clone(),
        comult: comult.into_iter().map(Acc::finish).collect(),
        counit: h.unit.clone(),
        antipode: antipode.into_iter().map(Acc::finish).collect(),
        metadata: dual_metadata(h),
    }
}

fn dual_name(name: &str) -> String {
    match name.strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
        Some(inner) => inner.to_string(),
        None => format!("dual({name})"),
    }
}

/// Grouplikes ↔ characters and matrix-like bases ↔ representations.
fn dual_metadata(h: &FinHopf) -> Metadata {
    let n = h.dim;
    let md = &h.metadata;
    let mut out = Metadata::default();
    for rep in &md.representations {
        if rep.dim == 1 {
            out.claimed_grouplikes.push((0..n).map(|k| rep.images[k][0][0].clone()).collect());
        } else {
            let d = rep.dim;
            let mb = (0..d)
                .map(|r| (0..d).map(|c| (0..n).map(|k| rep.images[k][r][c].clone()).collect()).collect())
                .collect();
            out.claimed_matrix_bases.push(mb);
        }
    }
    for g in &md.claimed_grouplikes {
        out.representations
            .push(Representation { dim: 1, images: g.iter().map(|c| vec![vec![c.clone()]]).collect() });
    }
    for mb in &md.claimed_matrix_bases {
        let d = mb.len();
        let images = (0..n)
            .map(|k| (0..d).map(|r| (0..d).map(|c| mb[r][c][k].clone()).collect()).collect())
            .collect();
        out.representations.push(Representation { dim: d, images });
    }
    out
}

/// Componentwise tensor product; basis (i, a) ↦ i·dim K + a.
pub fn tensor_hopf(h: &FinHopf, k: &FinHopf) -> FinHopf {
    let m = lcm_order(h.field.order(), k.field.order());
    let h = h.embed(m);
    let k = k.embed(m);
    let f = h.field.clone();
    let (n1, n2) = (h.dim, k.dim);
    let n = n1 * n2;
    let idx = |i: usize, a: usize| i * n2 + a;
    let mut mult = vec![SparseVec::new(); n * n];
    for i in 0..n1 {
        for a in 0..n2 {
            for j in 0..n1 {
                for b in 0..n2 {
                    let mut acc = Acc::default();
                    for (u, c) in h.mul_basis(i, j) {
                        for (v, d) in k.mul_basis(a, b) {
                            acc.add(idx(*u, *v), c * d);
                        }
                    }
                    mult[idx(i, a) * n + idx(j, b)] = acc.finish();
                }
            }
        }
    }
    let mut comult = vec![SparseVec::new(); n];
    let mut antipode = vec![SparseVec::new(); n];
    for i in 0..n1 {
        for a in 0..n2 {
            let mut acc = Acc::default();
            for (p, c) in &h.comult[i] {
                let (j1, j2) = (p / n1, p % n1);
                for (q, d) in &k.comult[a] {
                    let (b1, b2) = (q / n2, q % n2);
                    acc.add(idx(j1, b1) * n + idx(j2, b2), c * d);
                }
            }
            comult[idx(i, a)] = acc.finish();
            let mut s = Acc::default();
            for (u, c) in &h.antipode[i] {
                for (v, d) in &k.antipode[a] {
                    s.add(idx(*u, *v), c * d);
                }
            }
            antipode[idx(i, a)] = s.finish();
        }
    }
    let kron = |x: &Vector, y: &Vector| -> Vector {
        let mut out = Vec::with_capacity(n);
        for a in x {
            for b in y {
                out.push(a * b);
            }
        }
        out
    };
    let unit = kron(&h.unit, &k.unit);
    let counit = kron(&h.counit, &k.counit);

    let (hm, km) = (&h.metadata, &k.metadata);
    let mut md = Metadata::default();
    for g in &hm.claimed_grouplikes {
        for g2 in &km.claimed_grouplikes {
            md.claimed_grouplikes.push(kron(g, g2));
        }
    }
    // matrix-like bases: Kronecker products, grouplikes counted as 1×1 blocks
    let blocks = |m: &Metadata| -> Vec<Vec<Vec<Vector>>> {
        m.claimed_grouplikes
            .iter()
            .map(|g| vec![vec![g.clone()]])
            .chain(m.claimed_matrix_bases.iter().cloned())
            .collect()
    };
    for x in blocks(hm) {
        for y in blocks(km) {
            if x.len() == 1 && y.len() == 1 {
                continue;
            }
            let (d1, d2) = (x.len(), y.len());
            let d = d1 * d2;
            let mut mb = vec![vec![Vec::new(); d]; d];
            for r1 in 0..d1 {
                for c1 in 0..d1 {
                    for r2 in 0..d2 {
                        for c2 in 0..d2 {
                            mb[r1 * d2 + r2][c1 * d2 + c2] = kron(&x[r1][c1], &y[r2][c2]);
                        }
                    }
                }
            }
            md.claimed_matrix_bases.push(mb);
        }
    }
    for r in &hm.representations {
        for s in &km.representations {
            let d = r.dim * s.dim;
            let mut images = Vec::with_capacity(n);
            for i in 0..n1 {
                for a in 0..n2 {
                    let mut mtx = vec![vec![f.zero(); d]; d];
                    for r1 in 0..r.dim {
                        for c1 in 0..r.dim {
                            for r2 in 0..s.dim {
                                for c2 in 0..s.dim {
                                    mtx[r1 * s.dim + r2][c1 * s.dim + c2] =
                                        &r.images[i][r1][c1] * &s.images[a][r2][c2];
                                }
                            }
                        }
                    }
                    images.push(mtx);
                }
            }
            md.representations.push(Representation { dim: d, images });
        }
    }
    if !hm.claimed_generators.is_empty() && !km.claimed_generators.is_empty() {
        let hone = h.one();
        let kone = k.one();
        for (name, v) in &hm.claimed_generators {
            md.claimed_generators.push((format!("{name}⊗1"), kron(v, &kone)));
        }
        for (name, v) in &km.claimed_generators {
            md.claimed_generators.push((format!("1⊗{name}"), kron(&hone, v)));
        }
        if hm.monomials.len() == n1 && km.monomials.len() == n2 {
            let off = hm.claimed_generators.len();
            for i in 0..n1 {
                for a in 0..n2 {
                    let mut w = hm.monomials[i].clone();
                    w.extend(km.monomials[a].iter().map(|g| g + off));
                    md.monomials.push(w);
                }
            }
        }
    }
    FinHopf {
        name: format!("{}⊗{}", h.name, k.name),
        dim: n,
        field: f,
        mult,
        unit,
        comult,
        counit,
        antipode,
        metadata: md,
    }
}

/// Checks that `map` (dim K × dim H) respects every structure map.
pub fn verify_hopf_morphism(map: &LinearMap, h: &FinHopf, k: &FinHopf) -> Result<Report, HopfError> {
    if map.source_dim != h.dim || map.target_dim != k.dim {
        return Err(HopfError::Shape(format!(
            "map is {}→{}, algebras have dims {} and {}",
            map.source_dim, map.target_dim, h.dim, k.dim
        )));
    }
    if h.field != k.field {
        return Err(HopfError::Shape("algebras must be embedded in a common field first".into()));
    }
    let f = &h.field;
    let cols = map.columns();
    let n = h.dim;
    let m = k.dim;
    let image = |v: &SparseVec| -> Vector {
        let mut out = zero_vec(f, m);
        for (i, c) in v {
            crate::linalg::add_scaled(&mut out, c, &cols[*i]);
        }
        out
    };
    let mut report = Report::default();
    if map.apply(&h.unit) != k.unit {
        report.push("morphism-unit", vec![]);
    }
    let rows: Vec<Report> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut r = Report::default();
            for j in 0..n {
                let lhs = image(h.mul_basis(i, j));
                let rhs = k.mul(&cols[i], &cols[j]);
                if lhs != rhs {
                    r.push("morphism-mult", vec![i, j]);
                }
            }
            let mut lhs = zero_vec(f, m * m);
            for (p, c) in &h.comult[i] {
                let (a, b) = (p / n, p % n);
                for (u, x) in cols[a].iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let cx = c * x;
                    for (v, y) in cols[b].iter().enumerate() {
                        if !y.is_zero() {
                            lhs[u * m + v].add_mul(&cx, y);
                        }
                    }
                }
            }
            if lhs != k.comult_vec(&cols[i]) {
                r.push("morphism-comult", vec![i]);
            }
            if k.counit_of(&cols[i]) != h.counit[i] {
                r.push("morphism-counit", vec![i]);
            }
            if image(&h.antipode[i]) != k.antipode_vec(&cols[i]) {
                r.push("morphism-antipode", vec![i]);
            }
            r
        })
        .collect();
    for r in rows {
        report.extend(r);
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Right: {h : (id⊗π)Δh = h⊗π(1)}; left: {h : (π⊗id)Δh = π(1)⊗h}.
pub fn coinvariants(h: &FinHopf, k: &FinHopf, pi: &LinearMap, side: Side) -> Result<Subspace, HopfError> {
    let rep = verify_hopf_morphism(pi, h, k)?;
    if !rep.ok() {
        return Err(HopfError::NotMorphism(rep.to_string()));
    }
    let f = &h.field;
    let (n, m) = (h.dim, k.dim);
    let pcols = pi.columns();
    let p1 = pi.apply(&h.unit);
    let mut columns: Vec<Vector> = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = zero_vec(f, n * m);
        for (p, c) in &h.comult[i] {
            let (a, b) = (p / n, p % n);
            match side {
                Side::Right => {
                    for (u, x) in pcols[b].iter().enumerate() {
                        if !x.is_zero() {
                            v[a * m + u].add_mul(c, x);
                        }
                    }
                }
                Side::Left => {
                    for (u, x) in pcols[a].iter().enumerate() {
                        if !x.is_zero() {
                            v[u * n + b].add_mul(c, x);
                        }
                    }
                }
            }
        }
        for (u, x) in p1.iter().enumerate() {
            match side {
                Side::Right => v[i * m + u] -= x,
                Side::Left => v[u * n + i] -= x,
            }
        }
        columns.push(v);
    }
    let map = LinearMap::from_columns(n * m, columns);
    let co = map.kernel(f);
    if pi.rank() == m && co.dim() * m != n {
        return Err(HopfError::Lemma(format!(
            "dim H = dim H^coπ · dim K violated: {} ≠ {}·{} (input morphism invalid or internal bug)",
            n,
            co.dim(),
            m
        )));
    }
    Ok(co)
}

/// π restricted to R equals ε(·)·1_K on R.
pub fn restricts_to_counit(h: &FinHopf, k: &FinHopf, pi: &LinearMap, r: &Subspace) -> bool {
    r.basis().iter().all(|v| {
        let e = h.counit_of(v);
        let want: Vector = k.unit.iter().map(|u| &e * u).collect();
        pi.apply(v) == want
    })
}

/// The one-dimensional Hopf algebra k.
pub fn trivial_hopf(field: &Field) -> FinHopf {
    let one = field.one();
    FinHopf {
        name: "k".into(),
        dim: 1,
        field: field.clone(),
        mult: vec![vec![(0, one.clone())]],
        unit: vec![one.clone()],
        comult: vec![vec![(0, one.clone())]],
        counit: vec![one.clone()],
        antipode: vec![vec![(0, one.clone())]],
        metadata: Metadata {
            claimed_grouplikes: vec![vec![one.clone()]],
            representations: vec![Representation { dim: 1, images: vec![vec![vec![one]]] }],
            ..Metadata::default()
        },
    }
}
