use std::fmt;

use super::field::{Field, Scalar};
use super::sparse::SparseVec;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// A dense matrix over a [`Field`], stored row-major.
///
/// Linear maps act on row vectors: a map `V -> W` is a `dim V x dim W`
/// matrix whose row `i` is the image of the `i`-th basis vector, and the
/// composite "first `f`, then `g`" is the product `f * g`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds from explicit rows; every row must have `cols` entries in `field`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Mat> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            if row.iter().any(|x| !field.contains(x)) {
                return Err(Error::FieldMismatch);
            }
            data.extend(row);
        }
        Ok(Mat {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn from_sparse_rows(field: Field, cols: usize, rows: &[SparseVec]) -> Mat {
        let mut m = Mat::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, x) in r.entries() {
                m.set(i, *j, x.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        debug_assert_eq!(x.field(), self.field);
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Scalar] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn sparse_row(&self, i: usize) -> SparseVec {
        SparseVec::from_dense(self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Matrix product `self * rhs`, skipping zero entries on both sides.
    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let rhs_rows: Vec<Vec<(usize, &Scalar)>> = (0..rhs.rows)
            .map(|k| rhs.row(k).iter().enumerate().filter(|(_, b)| !b.is_zero()).collect())
            .collect();
        let mut out = Mat::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            let base = i * rhs.cols;
            for (k, row) in rhs_rows.iter().enumerate() {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for &(j, b) in row {
                    out.data[base + j].add_mul(a, b);
                }
            }
        }
        out
    }

    /// The row vector `v * self`.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![self.field.zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.row(k).iter().enumerate() {
                if !b.is_zero() {
                    out[j].add_mul(a, b);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Kronecker product with row-major pair indexing `(i, i') -> i * n' + i'`.
    pub fn kron(&self, rhs: &Mat) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = rhs.get(k, l);
                        if !b.is_zero() {
                            out.set(i * rhs.rows + k, j * rhs.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn vstack(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Mat {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form and its pivot columns. Zero rows are dropped.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let space = Subspace::span_rows(self);
        (space.basis(), space.pivots().to_vec())
    }

    pub fn rank(&self) -> usize {
        Subspace::span_rows(self).dim()
    }

    /// `{v : self * v^T = 0}`, the null space of `self` (vectors of length `cols`).
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let gens = (0..n).filter(|&j| !is_pivot[j]).map(|free| {
            let mut pairs = vec![(free, self.field.one())];
            for (row, &p) in pivots.iter().enumerate() {
                let x = r.get(row, free);
                if !x.is_zero() {
                    pairs.push((p, -x));
                }
            }
            SparseVec::from_pairs(pairs)
        });
        Subspace::span(self.field, n, gens)
    }

    /// `{v : v * self = 0}`, the kernel of the linear map `self` in the row convention.
    pub fn left_kernel(&self) -> Subspace {
        self.transpose().kernel()
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Mat::from_fn(self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Solves `x * self = b` for every row of `b`; `None` if some row has no solution.
    pub fn solve_left(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(self.cols, b.cols);
        // rows of [self^T | b^T]^T style: solve self^T x^T = b^T
        let t = self.transpose();
        let m = self.rows;
        let mut aug = Mat::zeros(self.field, t.rows, m + b.rows);
        for i in 0..t.rows {
            for j in 0..m {
                aug.set(i, j, t.get(i, j).clone());
            }
            for j in 0..b.rows {
                aug.set(i, m + j, b.get(j, i).clone());
            }
        }
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= m) {
            return None;
        }
        let mut x = Mat::zeros(self.field, b.rows, m);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..b.rows {
                x.set(j, p, r.get(row, m + j).clone());
            }
        }
        Some(x)
    }

    /// Index of the first row where `self` and `other` differ.
    pub fn first_differing_row(&self, other: &Mat) -> Option<usize> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        (0..self.rows).find(|&i| self.row(i) != other.row(i))
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn rref_examples() {
        let (r, p) = Mat::from_i64(q(), &[&[2, 4], &[1, 2]]).rref();
        assert_eq!(r, Mat::from_i64(q(), &[&[1, 2]]));
        assert_eq!(p, vec![0]);

        let id = Mat::identity(q(), 3);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);

        let f2 = Field::Prime(2);
        let (r, p) = Mat::from_i64(f2, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r, Mat::from_i64(f2, &[&[1, 1]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        let z = Mat::zeros(q(), 3, 3);
        assert_eq!(z.kernel().dim(), 3);

        let inv = Mat::from_i64(q(), &[&[1, 2], &[3, 4]]);
        assert_eq!(inv.kernel().dim(), 0);

        let k = Mat::from_i64(q(), &[&[1, 1]]).kernel();
        assert_eq!(k.basis(), Mat::from_i64(q(), &[&[1, -1]]));
    }

    #[test]
    fn rank_nullity() {
        let m = Mat::from_i64(q(), &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        assert_eq!(m.rank() + m.kernel().dim(), 4);
        let b = m.kernel().basis();
        assert!(m.mul(&b.transpose()).is_zero());
    }

    #[test]
    fn inverse_and_solve() {
        let m = Mat::from_i64(q(), &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(q(), 2));
        assert!(Mat::from_i64(q(), &[&[1, 2], &[2, 4]]).inverse().is_none());

        let b = Mat::from_i64(q(), &[&[5, 6]]);
        let x = m.solve_left(&b).unwrap();
        assert_eq!(x.mul(&m), b);
        let rank1 = Mat::from_i64(q(), &[&[1, 2], &[2, 4]]);
        assert!(rank1.solve_left(&Mat::from_i64(q(), &[&[1, 0]])).is_none());
    }

    #[test]
    fn kron_indexing() {
        let a = Mat::from_i64(q(), &[&[1, 2], &[3, 4]]);
        let b = Mat::from_i64(q(), &[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        // row (1,0) -> 2, col (0,1) -> 1 : a[1][0] * b[0][1]
        assert_eq!(k.get(2, 1), &q().from_i64(3));
        assert_eq!(k.get(1, 2), &q().from_i64(2));
        assert_eq!(k.rows(), 4);
    }

    #[test]
    fn left_kernel_is_map_kernel() {
        let f = Mat::from_i64(q(), &[&[1], &[1]]);
        let k = f.left_kernel();
        assert_eq!(k.basis(), Mat::from_i64(q(), &[&[1, -1]]));
    }
}
