//! Exact linear algebra over a cyclotomic field: canonical echelon forms,
//! subspaces (kernel / meet / join / annihilator) and linear maps.

use crate::scalars::{Field, FieldElem};

pub type Vector = Vec<FieldElem>;

pub fn zero_vec(field: &Field, n: usize) -> Vector {
    vec![field.zero(); n]
}

pub fn unit_vec(field: &Field, n: usize, i: usize) -> Vector {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn is_zero_vec(v: &[FieldElem]) -> bool {
    v.iter().all(|c| c.is_zero())
}

pub fn add_scaled(acc: &mut [FieldElem], c: &FieldElem, v: &[FieldElem]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        a.add_mul(c, b);
    }
}

pub fn scale_vec(c: &FieldElem, v: &[FieldElem]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn sub_vec(a: &[FieldElem], b: &[FieldElem]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_vec(a: &[FieldElem], b: &[FieldElem]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn dot(a: &[FieldElem], b: &[FieldElem]) -> FieldElem {
    let mut acc = a[0].field().zero();
    for (x, y) in a.iter().zip(b) {
        acc.add_mul(x, y);
    }
    acc
}

/// Incrementally maintained reduced row-echelon form.
///
/// Rows are kept sorted by pivot column, pivots are 1 and every pivot column
/// is zero outside its row, so the representation of a row space is unique.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Echelon {
        Echelon { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Normal form of `v` modulo the row space (supported on non-pivot columns).
    pub fn reduce(&self, v: &[FieldElem]) -> Vector {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = -&w[p];
                add_scaled(&mut w, &c, row);
            }
        }
        w
    }

    /// Adds `v` to the row space; returns true when it was independent.
    pub fn insert(&mut self, v: &[FieldElem]) -> bool {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero pivot");
        for c in w.iter_mut() {
            if !c.is_zero() {
                *c = &*c * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = -&row[p];
                add_scaled(row, &c, &w);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Basis of {x : row·x = 0 for every row}.
    pub fn null_space(&self, field: &Field) -> Vec<Vector> {
        let mut out = Vec::new();
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        for f in 0..self.ncols {
            if is_pivot[f] {
                continue;
            }
            let mut x = zero_vec(field, self.ncols);
            x[f] = field.one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[f].is_zero() {
                    x[p] = -&row[f];
                }
            }
            out.push(x);
        }
        out
    }
}

/// Subspace of k^n with a canonical RREF basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    field: Field,
    echelon: Echelon,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim() == other.ambient_dim() && self.basis() == other.basis()
    }
}

impl Subspace {
    pub fn zero(field: &Field, n: usize) -> Subspace {
        Subspace { field: field.clone(), echelon: Echelon::new(n) }
    }

    pub fn full(field: &Field, n: usize) -> Subspace {
        Subspace::span(field, n, (0..n).map(|i| unit_vec(field, n, i)))
    }

    pub fn span<I>(field: &Field, n: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut echelon = Echelon::new(n);
        for v in vectors {
            echelon.insert(&v);
        }
        Subspace { field: field.clone(), echelon }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.echelon.ncols()
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn basis(&self) -> &[Vector] {
        self.echelon.rows()
    }

    pub fn pivots(&self) -> &[usize] {
        self.echelon.pivots()
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        self.echelon.contains(v)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    /// Normal form of `v` modulo this subspace.
    pub fn reduce(&self, v: &[FieldElem]) -> Vector {
        self.echelon.reduce(v)
    }

    pub fn join(&self, other: &Subspace) -> Subspace {
        let mut e = self.echelon.clone();
        for v in other.basis() {
            e.insert(v);
        }
        Subspace { field: self.field.clone(), echelon: e }
    }

    /// {x : <w, x> = 0 for all w in self} under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        let n = self.ambient_dim();
        Subspace::span(&self.field, n, self.echelon.null_space(&self.field))
    }

    pub fn meet(&self, other: &Subspace) -> Subspace {
        self.annihilator().join(&other.annihilator()).annihilator()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }
}

/// Kernel of the matrix whose rows are given (each of length `ncols`).
pub fn kernel_of_rows<I>(field: &Field, ncols: usize, rows: I) -> Subspace
where
    I: IntoIterator<Item = Vector>,
{
    let mut e = Echelon::new(ncols);
    for r in rows {
        if !is_zero_vec(&r) {
            e.insert(&r);
        }
    }
    Subspace::span(field, ncols, e.null_space(field))
}

/// Linear map stored as a dense matrix: `matrix[r][c]` is the coefficient of
/// target basis r in the image of source basis c.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMap {
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: Vec<Vector>,
}

impl LinearMap {
    pub fn zero(field: &Field, source_dim: usize, target_dim: usize) -> LinearMap {
        LinearMap { source_dim, target_dim, matrix: vec![zero_vec(field, source_dim); target_dim] }
    }

    pub fn identity(field: &Field, n: usize) -> LinearMap {
        Self::from_columns(n, (0..n).map(|i| unit_vec(field, n, i)).collect())
    }

    /// Build from the images of the source basis vectors.
    pub fn from_columns(target_dim: usize, columns: Vec<Vector>) -> LinearMap {
        let source_dim = columns.len();
        let mut matrix: Vec<Vector> = Vec::with_capacity(target_dim);
        for r in 0..target_dim {
            matrix.push(columns.iter().map(|c| c[r].clone()).collect());
        }
        LinearMap { source_dim, target_dim, matrix }
    }

    pub fn column(&self, c: usize) -> Vector {
        self.matrix.iter().map(|row| row[c].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.source_dim).map(|c| self.column(c)).collect()
    }

    pub fn apply(&self, v: &[FieldElem]) -> Vector {
        self.matrix.iter().map(|row| dot(row, v)).collect()
    }

    pub fn compose(&self, first: &LinearMap) -> LinearMap {
        // self ∘ first
        let cols = first.columns().iter().map(|c| self.apply(c)).collect();
        LinearMap::from_columns(self.target_dim, cols)
    }

    pub fn field(&self) -> Option<&Field> {
        self.matrix.first().and_then(|r| r.first()).map(|c| c.field())
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.source_dim);
        for row in &self.matrix {
            e.insert(row);
        }
        e.rank()
    }

    pub fn kernel(&self, field: &Field) -> Subspace {
        kernel_of_rows(field, self.source_dim, self.matrix.iter().cloned())
    }

    pub fn image(&self, field: &Field) -> Subspace {
        Subspace::span(field, self.target_dim, self.columns())
    }

    /// Exact inverse of a square invertible map.
    pub fn inverse(&self, field: &Field) -> Option<LinearMap> {
        let n = self.source_dim;
        if n != self.target_dim {
            return None;
        }
        // Gauss–Jordan on [A | I].
        let mut e = Echelon::new(2 * n);
        for (r, row) in self.matrix.iter().enumerate() {
            let mut aug = row.clone();
            aug.extend(unit_vec(field, n, r));
            e.insert(&aug);
        }
        if e.rank() != n || e.pivots().iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        let matrix = e.rows().iter().map(|row| row[n..].to_vec()).collect();
        Some(LinearMap { source_dim: n, target_dim: n, matrix })
    }

    pub fn is_identity(&self) -> bool {
        self.source_dim == self.target_dim
            && self.matrix.iter().enumerate().all(|(r, row)| {
                row.iter().enumerate().all(|(c, x)| if r == c { x.is_one() } else { x.is_zero() })
            })
    }

    pub fn trace(&self, field: &Field) -> FieldElem {
        let mut t = field.zero();
        for i in 0..self.source_dim.min(self.target_dim) {
            t += &self.matrix[i][i];
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::new(1)
    }

    fn v(f: &Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn kernels_of_trivial_maps() {
        let f = q();
        assert_eq!(LinearMap::zero(&f, 5, 3).kernel(&f).dim(), 5);
        assert_eq!(LinearMap::identity(&f, 5).kernel(&f).dim(), 0);
    }

    #[test]
    fn meet_of_coordinate_planes() {
        let f = q();
        let a = Subspace::span(&f, 3, vec![v(&f, &[1, 0, 0]), v(&f, &[0, 1, 0])]);
        let b = Subspace::span(&f, 3, vec![v(&f, &[0, 1, 0]), v(&f, &[0, 0, 1])]);
        let m = a.meet(&b);
        assert_eq!(m, Subspace::span(&f, 3, vec![v(&f, &[0, 1, 0])]));
        assert_eq!(a.join(&b).dim(), 3);
    }

    #[test]
    fn canonical_form_is_basis_independent() {
        let f = q();
        let s1 = Subspace::span(&f, 4, vec![v(&f, &[1, 2, 0, 1]), v(&f, &[0, 1, 1, 0])]);
        let s2 = Subspace::span(&f, 4, vec![v(&f, &[1, 3, 1, 1]), v(&f, &[2, 3, -1, 2])]);
        assert_eq!(s1, s2);
        assert_eq!(s1.basis(), s2.basis());
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Field::new(3);
        let z = f.zeta();
        let m = LinearMap::from_columns(2, vec![vec![f.one(), z.clone()], vec![f.from_int(2), f.one()]]);
        let inv = m.inverse(&f).unwrap();
        assert!(m.compose(&inv).is_identity());
        assert!(inv.compose(&m).is_identity());
    }
}
