//! Finite-dimensional unital associative algebras given by structure constants.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{format_vector, kron_vec, Field, Mat, Scalar};
use crate::verdict::{Verdict, Violation};

/// A unital associative algebra with basis `a_0, .., a_{n-1}`.
///
/// Row `i * n + j` of `table` holds the coordinates of `a_i * a_j`, so the
/// table is also the multiplication map `A (x) A -> A` in row-major pair
/// indexing.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: Field,
    dim: usize,
    table: Mat,
    unit: Vec<Scalar>,
    labels: Vec<String>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.table == other.table && self.unit == other.unit
    }
}

impl Eq for Algebra {}

impl Algebra {
    pub fn new(field: Field, table: Mat, unit: Vec<Scalar>, labels: Vec<String>) -> Result<Algebra> {
        let dim = unit.len();
        if table.field() != field || unit.iter().any(|x| !field.contains(x)) {
            return Err(Error::FieldMismatch);
        }
        if table.rows() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                found: table.rows(),
            });
        }
        if table.cols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: table.cols(),
            });
        }
        if labels.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: labels.len(),
            });
        }
        Ok(Algebra {
            field,
            dim,
            table,
            unit,
            labels,
        })
    }

    /// Builds from a closure giving the product of two basis elements.
    pub fn from_products(
        field: Field,
        labels: &[&str],
        unit: Vec<Scalar>,
        product: impl Fn(usize, usize) -> Vec<Scalar>,
    ) -> Algebra {
        let dim = labels.len();
        let rows = (0..dim * dim).map(|r| product(r / dim, r % dim)).collect();
        let table = Mat::from_rows(field, dim, rows).expect("product has algebra dimension");
        Algebra::new(field, table, unit, labels.iter().map(|s| s.to_string()).collect())
            .expect("well-shaped algebra data")
    }

    /// The ground field `k` as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        Algebra::from_products(field, &["1"], vec![field.one()], |_, _| vec![field.one()])
    }

    /// `k[x]/(x^n)` with basis `1, x, .., x^{n-1}`.
    pub fn truncated_polynomial(field: Field, n: usize) -> Algebra {
        assert!(n >= 1);
        let labels: Vec<String> = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
        let mut unit = vec![field.zero(); n];
        unit[0] = field.one();
        Algebra::from_products(field, &refs, unit, |i, j| {
            let mut v = vec![field.zero(); n];
            if i + j < n {
                v[i + j] = field.one();
            }
            v
        })
    }

    /// The dual numbers `k[x]/(x^2)`.
    pub fn dual_numbers(field: Field) -> Algebra {
        Algebra::truncated_polynomial(field, 2)
    }

    /// Group algebra from a Cayley table `table[g][h] = gh`.
    pub fn group_algebra(field: Field, table: &[Vec<usize>], labels: &[&str]) -> Result<Algebra> {
        let n = table.len();
        if labels.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: labels.len(),
            });
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::AlgebraMismatch("group table has no identity".into()))?;
        let mut unit = vec![field.zero(); n];
        unit[e] = field.one();
        Ok(Algebra::from_products(field, labels, unit, |i, j| {
            let mut v = vec![field.zero(); n];
            v[table[i][j]] = field.one();
            v
        }))
    }

    /// Upper triangular 2x2 matrices, basis `e11, e12, e22`. Not commutative.
    pub fn upper_triangular(field: Field) -> Algebra {
        let unit = vec![field.one(), field.zero(), field.one()];
        Algebra::from_products(field, &["e11", "e12", "e22"], unit, |i, j| {
            let mut v = vec![field.zero(); 3];
            match (i, j) {
                (0, 0) => v[0] = field.one(),
                (0, 1) | (1, 2) => v[1] = field.one(),
                (2, 2) => v[2] = field.one(),
                _ => {}
            }
            v
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &Mat {
        &self.table
    }

    pub fn is_ground(&self) -> bool {
        self.dim == 1
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    /// `a_i * a_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        self.table.row(i * self.dim + j)
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (t, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[t].add_mul(&ab, c);
                    }
                }
            }
        }
        out
    }

    /// The map `y -> x * y`.
    pub fn left_mult(&self, x: &[Scalar]) -> Mat {
        let rows = (0..self.dim).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Mat::from_rows(self.field, self.dim, rows).expect("square")
    }

    /// The map `y -> y * x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Mat {
        let rows = (0..self.dim).map(|i| self.mul(&self.basis_vector(i), x)).collect();
        Mat::from_rows(self.field, self.dim, rows).expect("square")
    }

    pub fn format(&self, v: &[Scalar]) -> String {
        format_vector(&self.labels, v)
    }

    /// Associativity on all basis triples, then the unit law.
    pub fn check(&self) -> Verdict {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for t in 0..n {
                    let lhs = self.mul(&ij, &self.basis_vector(t));
                    let rhs = self.mul(&self.basis_vector(i), self.basis_product(j, t));
                    if lhs != rhs {
                        let w = format!("({}, {}, {})", self.labels[i], self.labels[j], self.labels[t]);
                        return Err(Violation::new("associativity", w).with_sides(self.format(&rhs), self.format(&lhs)));
                    }
                }
            }
        }
        for i in 0..n {
            let e = self.basis_vector(i);
            for side in [self.mul(&self.unit, &e), self.mul(&e, &self.unit)] {
                if side != e {
                    return Err(
                        Violation::new("unit", self.labels[i].clone()).with_sides(self.format(&e), self.format(&side))
                    );
                }
            }
        }
        Ok(())
    }

    /// `A (x)_k A'` with basis `a_i (x) a'_j` at index `i * dim' + j`.
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let (n, m) = (self.dim, other.dim);
        let dim = n * m;
        let mut table = Mat::zeros(self.field, dim * dim, dim);
        for x in 0..dim {
            for y in 0..dim {
                let (i, i2) = (x / m, x % m);
                let (j, j2) = (y / m, y % m);
                let a = self.basis_product(i, j);
                let b = other.basis_product(i2, j2);
                for (s, u) in a.iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    for (t, v) in b.iter().enumerate() {
                        if !v.is_zero() {
                            table.set(x * dim + y, s * m + t, u * v);
                        }
                    }
                }
            }
        }
        let unit = kron_vec(&self.unit, &other.unit);
        let labels = tensor_labels(&self.labels, &other.labels);
        Algebra::new(self.field, table, unit, labels)
    }
}

/// `check_algebra`.
pub fn check_algebra(a: &Algebra) -> Verdict {
    a.check()
}

/// `tensor_algebra`.
pub fn tensor_algebra(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    a.tensor(b)
}

/// Labels `x⊗y` in row-major order; a ground-field factor labelled `1` is dropped.
pub fn tensor_labels(left: &[String], right: &[String]) -> Vec<String> {
    let mut out = Vec::with_capacity(left.len() * right.len());
    for a in left {
        for b in right {
            out.push(match (left.len() == 1 && a == "1", right.len() == 1 && b == "1") {
                (true, _) => b.clone(),
                (_, true) => a.clone(),
                _ => format!("{a}⊗{b}"),
            });
        }
    }
    out
}

/// An algebra map `A -> B`, stored in the row convention (`dim A x dim B`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    map: Mat,
}

impl AlgebraMorphism {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, map: Mat) -> Result<Self> {
        if source.field() != target.field() || map.field() != source.field() {
            return Err(Error::FieldMismatch);
        }
        if map.rows() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                found: map.rows(),
            });
        }
        if map.cols() != target.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim(),
                found: map.cols(),
            });
        }
        Ok(AlgebraMorphism { source, target, map })
    }

    pub fn identity(a: Arc<Algebra>) -> Self {
        let map = Mat::identity(a.field(), a.dim());
        AlgebraMorphism {
            source: a.clone(),
            target: a,
            map,
        }
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn map(&self) -> &Mat {
        &self.map
    }

    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.map.apply(x)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map == Mat::identity(self.map.field(), self.map.rows())
    }

    /// Unit preservation, then multiplicativity on basis pairs.
    pub fn check(&self) -> Verdict {
        let (s, t) = (&self.source, &self.target);
        let image_unit = self.apply(s.unit());
        if image_unit != t.unit() {
            return Err(Violation::new("unit-preservation", "1").with_sides(t.format(t.unit()), t.format(&image_unit)));
        }
        for i in 0..s.dim() {
            for j in 0..s.dim() {
                let lhs = self.apply(s.basis_product(i, j));
                let rhs = t.mul(self.map.row(i), self.map.row(j));
                if lhs != rhs {
                    let w = format!("({}, {})", s.labels()[i], s.labels()[j]);
                    return Err(Violation::new("multiplicativity", w).with_sides(t.format(&rhs), t.format(&lhs)));
                }
            }
        }
        Ok(())
    }

    /// "First `self`, then `next`".
    pub fn then(&self, next: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        if *self.target != *next.source {
            return Err(Error::ObjectMismatch("algebra morphisms are not composable".into()));
        }
        AlgebraMorphism::new(self.source.clone(), next.target.clone(), self.map.mul(&next.map))
    }

    pub fn tensor(&self, other: &AlgebraMorphism) -> Result<AlgebraMorphism> {
        let source = Arc::new(self.source.tensor(&other.source)?);
        let target = Arc::new(self.target.tensor(&other.target)?);
        AlgebraMorphism::new(source, target, self.map.kron(&other.map))
    }

    pub fn is_injective(&self) -> bool {
        self.map.rank() == self.source.dim()
    }

    pub fn inverse(&self) -> Option<AlgebraMorphism> {
        let inv = self.map.inverse()?;
        Some(AlgebraMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            map: inv,
        })
    }
}

/// `check_algebra_morphism`.
pub fn check_algebra_morphism(f: &AlgebraMorphism) -> Verdict {
    f.check()
}
