use std::collections::BTreeMap;

use super::field::{Field, Scalar};
use super::mat::Mat;
use super::sparse::SparseVec;

/// Incremental row echelon form; `finish` back-substitutes to RREF.
pub struct EchelonBuilder {
    field: Field,
    ambient_dim: usize,
    rows: BTreeMap<usize, SparseVec>,
}

impl EchelonBuilder {
    pub fn new(field: Field, ambient_dim: usize) -> Self {
        EchelonBuilder {
            field,
            ambient_dim,
            rows: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the span; returns `false` if it was already there.
    pub fn insert(&mut self, mut v: SparseVec) -> bool {
        loop {
            let Some((lead, c)) = v.leading().cloned() else {
                return false;
            };
            debug_assert!(lead < self.ambient_dim);
            match self.rows.get(&lead) {
                Some(row) => v.axpy(&-c, row),
                None => {
                    v.scale(&c.inv().expect("leading entry is nonzero"));
                    self.rows.insert(lead, v);
                    return true;
                }
            }
        }
    }

    pub fn finish(self) -> Subspace {
        let field = self.field;
        let mut reduced: BTreeMap<usize, SparseVec> = BTreeMap::new();
        for (&p, row) in self.rows.iter().rev() {
            let mut row = row.clone();
            let pivot_hits: Vec<(usize, Scalar)> = row
                .entries()
                .iter()
                .filter(|(j, _)| *j != p && reduced.contains_key(j))
                .cloned()
                .collect();
            for (q, c) in pivot_hits {
                row.axpy(&-c, &reduced[&q]);
            }
            reduced.insert(p, row);
        }
        let pivots: Vec<usize> = reduced.keys().copied().collect();
        let rows: Vec<SparseVec> = reduced.into_values().collect();
        Subspace::from_rref(field, self.ambient_dim, rows, pivots)
    }
}

/// A subspace of `k^n`, held as the rows of its reduced row echelon basis.
/// The representation is canonical, so `==` is equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl Subspace {
    fn from_rref(field: Field, ambient_dim: usize, rows: Vec<SparseVec>, pivots: Vec<usize>) -> Self {
        let mut pivot_row = vec![None; ambient_dim];
        for (r, &p) in pivots.iter().enumerate() {
            pivot_row[p] = Some(r);
        }
        Subspace {
            field,
            ambient_dim,
            rows,
            pivots,
            pivot_row,
        }
    }

    pub fn span(field: Field, ambient_dim: usize, gens: impl IntoIterator<Item = SparseVec>) -> Self {
        let mut b = EchelonBuilder::new(field, ambient_dim);
        for g in gens {
            b.insert(g);
        }
        b.finish()
    }

    pub fn span_rows(m: &Mat) -> Self {
        Subspace::span(m.field(), m.cols(), (0..m.rows()).map(|i| m.sparse_row(i)))
    }

    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace::from_rref(field, ambient_dim, Vec::new(), Vec::new())
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        let rows = (0..ambient_dim).map(|i| SparseVec::unit(field, i)).collect();
        Subspace::from_rref(field, ambient_dim, rows, (0..ambient_dim).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn sparse_rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub(crate) fn pivot_row(&self, col: usize) -> Option<&SparseVec> {
        self.pivot_row[col].map(|r| &self.rows[r])
    }

    /// The RREF basis as a `dim x ambient_dim` matrix.
    pub fn basis(&self) -> Mat {
        Mat::from_sparse_rows(self.field, self.ambient_dim, &self.rows)
    }

    /// Non-pivot columns in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|&j| self.pivot_row[j].is_none()).collect()
    }

    /// The normal form of `v`: `v` minus the unique element of the subspace
    /// that agrees with it on every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            let neg = -c;
            for (j, x) in row.entries() {
                out[*j].add_mul(&neg, x);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_sparse(&self, v: &SparseVec) -> bool {
        let mut w = v.clone();
        for (p, c) in v.entries() {
            if let Some(row) = self.pivot_row(*p) {
                w.axpy(&-c, row);
            }
        }
        w.is_empty()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains_sparse(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(
            self.field,
            self.ambient_dim,
            self.rows.iter().chain(&other.rows).cloned(),
        )
    }

    /// Images of the basis under `map`, spanned in the target space.
    pub fn image_under(&self, map: &Mat) -> Subspace {
        let b = self.basis().mul(map);
        Subspace::span_rows(&b)
    }
}

/// `k^n / relations`, with the non-pivot coordinates of the relations as the
/// chosen basis of the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    relations: Subspace,
    rep_columns: Vec<usize>,
    rep_index: Vec<Option<usize>>,
}

impl QuotientSpace {
    pub fn new(relations: Subspace) -> Self {
        let rep_columns = relations.free_columns();
        let mut rep_index = vec![None; relations.ambient_dim()];
        for (k, &c) in rep_columns.iter().enumerate() {
            rep_index[c] = Some(k);
        }
        QuotientSpace {
            relations,
            rep_columns,
            rep_index,
        }
    }

    pub fn field(&self) -> Field {
        self.relations.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.rep_columns.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn rep_columns(&self) -> &[usize] {
        &self.rep_columns
    }

    /// Class of an ambient vector given by its nonzero entries.
    pub fn project_entries<'a>(&self, entries: impl IntoIterator<Item = (usize, &'a Scalar)>) -> Vec<Scalar> {
        let field = self.field();
        let mut out = vec![field.zero(); self.dim()];
        let one = field.one();
        for (c, x) in entries {
            if x.is_zero() {
                continue;
            }
            match self.rep_index[c] {
                Some(k) => out[k].add_mul(x, &one),
                None => {
                    let row = self.relations.pivot_row(c).expect("non-rep column is a pivot");
                    let neg = -x;
                    for (j, y) in row.entries() {
                        if *j != c {
                            let k = self.rep_index[*j].expect("RREF row off-pivot entries are free");
                            out[k].add_mul(&neg, y);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient_dim());
        self.project_entries(v.iter().enumerate())
    }

    pub fn project_sparse(&self, v: &SparseVec) -> Vec<Scalar> {
        self.project_entries(v.entries().iter().map(|(i, x)| (*i, x)))
    }

    pub fn project_rows(&self, m: &Mat) -> Mat {
        let rows: Vec<Vec<Scalar>> = (0..m.rows()).map(|i| self.project(m.row(i))).collect();
        Mat::from_rows(self.field(), self.dim(), rows).expect("projected rows have quotient width")
    }

    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(q.len(), self.dim());
        let mut out = vec![self.field().zero(); self.ambient_dim()];
        for (k, x) in q.iter().enumerate() {
            out[self.rep_columns[k]] = x.clone();
        }
        out
    }

    pub fn lift_sparse(&self, q: &[Scalar]) -> SparseVec {
        SparseVec::from_pairs(
            q.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (self.rep_columns[k], x.clone()))
                .collect(),
        )
    }

    pub fn lift_rows(&self, m: &Mat) -> Mat {
        let rows: Vec<Vec<Scalar>> = (0..m.rows()).map(|i| self.lift(m.row(i))).collect();
        Mat::from_rows(self.field(), self.ambient_dim(), rows).expect("lifted rows have ambient width")
    }

    /// The projection as an `ambient_dim x dim` matrix.
    pub fn project_matrix(&self) -> Mat {
        self.project_rows(&Mat::identity(self.field(), self.ambient_dim()))
    }

    /// The lift as a `dim x ambient_dim` matrix.
    pub fn lift_matrix(&self) -> Mat {
        self.lift_rows(&Mat::identity(self.field(), self.dim()))
    }

    pub fn is_zero_class(&self, v: &[Scalar]) -> bool {
        self.relations.contains(v)
    }
}

/// `quotient(ambient_dim, relations)`.
pub fn quotient(ambient_dim: usize, relations: Subspace) -> QuotientSpace {
    assert_eq!(relations.ambient_dim(), ambient_dim);
    QuotientSpace::new(relations)
}
