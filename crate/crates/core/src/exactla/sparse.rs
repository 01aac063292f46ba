use super::field::{Field, Scalar};

/// A vector stored as `(index, value)` pairs, sorted by index, without zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(field: Field, index: usize) -> Self {
        SparseVec {
            entries: vec![(index, field.one())],
        }
    }

    /// Builds from unsorted pairs; duplicates are summed and zeros dropped.
    pub fn from_pairs(mut pairs: Vec<(usize, Scalar)>) -> Self {
        pairs.sort_by_key(|(i, _)| *i);
        let mut entries: Vec<(usize, Scalar)> = Vec::with_capacity(pairs.len());
        for (i, x) in pairs {
            match entries.last_mut() {
                Some((j, acc)) if *j == i => *acc = &*acc + &x,
                _ => entries.push((i, x)),
            }
        }
        entries.retain(|(_, x)| !x.is_zero());
        SparseVec { entries }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, field: Field, len: usize) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, x) in &self.entries {
            out[*i] = x.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn scale(&mut self, c: &Scalar) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, x) in &mut self.entries {
            *x = &*x * c;
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &SparseVec) {
        if c.is_zero() || other.is_empty() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = other.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, _)), Some((j, _))) if i < j => out.push(a.next().unwrap()),
                (Some((i, _)), Some((j, _))) if i > j => {
                    let (j, y) = b.next().unwrap();
                    out.push((*j, c * y));
                }
                (Some(_), Some(_)) => {
                    let (i, mut x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    x.add_mul(c, y);
                    if !x.is_zero() {
                        out.push((i, x));
                    }
                }
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    let (j, y) = b.next().unwrap();
                    out.push((*j, c * y));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axpy_merges_and_cancels() {
        let f = Field::Prime(5);
        let mut a = SparseVec::from_pairs(vec![(0, f.from_i64(1)), (3, f.from_i64(2))]);
        let b = SparseVec::from_pairs(vec![(1, f.from_i64(1)), (3, f.from_i64(1))]);
        a.axpy(&f.from_i64(3), &b);
        assert_eq!(a.entries(), &[(0, f.from_i64(1)), (1, f.from_i64(3))][..],);
    }

    #[test]
    fn from_pairs_sums_duplicates() {
        let f = Field::Rationals;
        let v = SparseVec::from_pairs(vec![(2, f.from_i64(1)), (2, f.from_i64(-1)), (1, f.from_i64(4))]);
        assert_eq!(v.entries(), &[(1, f.from_i64(4))][..]);
    }
}
