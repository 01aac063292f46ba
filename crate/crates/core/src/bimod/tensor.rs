use std::sync::{Arc, OnceLock};

use super::{check_linear, Bimodule, BimoduleMorphism};
use crate::algcore::{tensor_labels, Algebra};
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, QuotientSpace, Scalar, SparseVec, Subspace};

/// `M (x)_k N` over `(A (x) A', B (x) B')` with the factorwise bi-action.
pub fn tensor_over_k(m: &Bimodule, n: &Bimodule) -> Result<Bimodule> {
    if m.field() != n.field() {
        return Err(Error::FieldMismatch);
    }
    let left = Arc::new(m.left_alg().tensor(n.left_alg())?);
    let right = Arc::new(m.right_alg().tensor(n.right_alg())?);
    let left_act = pair_kron(m.left_acts(), n.left_acts());
    let right_act = pair_kron(m.right_acts(), n.right_acts());
    Bimodule::new(left, right, left_act, right_act, tensor_labels(m.labels(), n.labels()))
}

fn pair_kron(xs: &[Mat], ys: &[Mat]) -> Vec<Mat> {
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for x in xs {
        for y in ys {
            out.push(x.kron(y));
        }
    }
    out
}

/// `(f (x) g)(v)` for an ambient vector `v` of `M (x)_k N`, without forming
/// the Kronecker product.
pub fn kron_apply(f: &Mat, g: &Mat, v: &[Scalar]) -> Vec<Scalar> {
    let n = g.rows();
    assert_eq!(v.len(), f.rows() * n);
    let field = f.field();
    let n2 = g.cols();
    let mut out = vec![field.zero(); f.cols() * n2];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        add_pure(&mut out, x, f.row(idx / n), g.row(idx % n));
    }
    out
}

/// `f (x) g` followed by the reshuffle `(i, j) (x) (i', j') -> (i, i') (x) (j, j')`,
/// for lifts `f: X -> P (x)_k Q` and `g: X' -> P' (x)_k Q'`. The result is a
/// lift `X (x) X' -> (P (x) P') (x)_k (Q (x) Q')`.
pub fn reshuffle_kron(f: &Mat, g: &Mat, pq: (usize, usize), pq2: (usize, usize)) -> Mat {
    let (p, q) = pq;
    let (p2, q2) = pq2;
    assert_eq!(f.cols(), p * q);
    assert_eq!(g.cols(), p2 * q2);
    let width = p * p2 * q * q2;
    let mut out = Mat::zeros(f.field(), f.rows() * g.rows(), width);
    for r in 0..f.rows() {
        for (a, x) in f.row(r).iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (i, j) = (a / q, a % q);
            for r2 in 0..g.rows() {
                for (b, y) in g.row(r2).iter().enumerate() {
                    if y.is_zero() {
                        continue;
                    }
                    let (i2, j2) = (b / q2, b % q2);
                    let col = (i * p2 + i2) * (q * q2) + j * q2 + j2;
                    out.set(r * g.rows() + r2, col, x * y);
                }
            }
        }
    }
    out
}

/// `out += c * (u (x) w)`.
pub(crate) fn add_pure(out: &mut [Scalar], c: &Scalar, u: &[Scalar], w: &[Scalar]) {
    let n = w.len();
    for (a, x) in u.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let cx = c * x;
        for (b, y) in w.iter().enumerate() {
            if !y.is_zero() {
                out[a * n + b].add_mul(&cx, y);
            }
        }
    }
}

/// `M (x)_B N` presented as the quotient of `M (x)_k N` by the span of
/// `(m_i b_t) (x) n_j - m_i (x) (b_t n_j)` over basis triples. By bilinearity
/// these span all balancing relations.
#[derive(Clone, Debug)]
pub struct PresentedTensor {
    left: Arc<Bimodule>,
    right: Arc<Bimodule>,
    quot: QuotientSpace,
    result: OnceLock<Arc<Bimodule>>,
    classes: OnceLock<Vec<SparseVec>>,
}

impl PresentedTensor {
    /// Builds the quotient. The induced actions are computed on first use and
    /// not re-verified; see [`tensor_over_alg`].
    pub fn new(left: Arc<Bimodule>, right: Arc<Bimodule>) -> Result<PresentedTensor> {
        if left.field() != right.field() {
            return Err(Error::FieldMismatch);
        }
        if left.right_alg() != right.left_alg() {
            return Err(Error::AlgebraMismatch(
                "right algebra of the left factor differs from left algebra of the right factor".into(),
            ));
        }
        let field = left.field();
        let (m, n) = (left.dim(), right.dim());
        let over = left.right_alg().clone();
        let relations = if over.dim() == 1 {
            Subspace::zero(field, m * n)
        } else {
            Subspace::span(field, m * n, balancing_relations(&left, &right, &over))
        };
        let quot = QuotientSpace::new(relations);
        Ok(PresentedTensor {
            left,
            right,
            quot,
            result: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    fn build_result(&self) -> Bimodule {
        let field = self.field();
        let (left, right, quot) = (&self.left, &self.right, &self.quot);
        let (m, n) = (left.dim(), right.dim());
        let left_act = left
            .left_acts()
            .iter()
            .map(|l| induced_rows(quot, n, |i, j| pure_sparse(l.row(i), &unit_row(field, n, j))))
            .collect();
        let right_act = right
            .right_acts()
            .iter()
            .map(|r| induced_rows(quot, n, |i, j| pure_sparse(&unit_row(field, m, i), r.row(j))))
            .collect();
        Bimodule::new(
            left.left_alg().clone(),
            right.right_alg().clone(),
            left_act,
            right_act,
            self.labels(),
        )
        .expect("induced actions have quotient shape")
    }

    /// Labels `m⊗n` of the representing pure tensors.
    pub fn labels(&self) -> Vec<String> {
        let ambient = tensor_labels(self.left.labels(), self.right.labels());
        self.quot.rep_columns().iter().map(|&c| ambient[c].clone()).collect()
    }

    pub fn format(&self, v: &[Scalar]) -> String {
        crate::exactla::format_vector(&self.labels(), v)
    }

    /// Checks that every action matrix of the ambient maps relations into relations.
    pub fn verify_actions(&self) -> Result<()> {
        let field = self.field();
        let (m, n) = (self.left.dim(), self.right.dim());
        let id_m = Mat::identity(field, m);
        let id_n = Mat::identity(field, n);
        let rels = self.quot.relations().sparse_rows();
        for (i, l) in self.left.left_acts().iter().enumerate() {
            for r in rels {
                if !self.is_zero_image(l, &id_n, r) {
                    let element = self.left.left_alg().labels()[i].clone();
                    return Err(Error::IllDefinedAction { side: "left", element });
                }
            }
        }
        for (j, g) in self.right.right_acts().iter().enumerate() {
            for r in rels {
                if !self.is_zero_image(&id_m, g, r) {
                    let element = self.right.right_alg().labels()[j].clone();
                    return Err(Error::IllDefinedAction { side: "right", element });
                }
            }
        }
        Ok(())
    }

    fn is_zero_image(&self, f: &Mat, g: &Mat, r: &SparseVec) -> bool {
        let v = sparse_kron_apply(f, g, r, self.right.dim());
        self.quot.project(&v).iter().all(Scalar::is_zero)
    }

    pub fn field(&self) -> Field {
        self.left.field()
    }

    pub fn left(&self) -> &Arc<Bimodule> {
        &self.left
    }

    pub fn right(&self) -> &Arc<Bimodule> {
        &self.right
    }

    pub fn over(&self) -> &Arc<Algebra> {
        self.left.right_alg()
    }

    pub fn quotient(&self) -> &QuotientSpace {
        &self.quot
    }

    pub fn relations(&self) -> &Subspace {
        self.quot.relations()
    }

    /// The quotient with its induced `(A, C)`-bimodule structure, built on first use.
    pub fn result(&self) -> &Arc<Bimodule> {
        self.result.get_or_init(|| Arc::new(self.build_result()))
    }

    pub fn dim(&self) -> usize {
        self.quot.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.quot.ambient_dim()
    }

    /// The pair `(i, j)` of factor basis indices representing quotient basis vector `k`.
    pub fn rep(&self, k: usize) -> (usize, usize) {
        let c = self.quot.rep_columns()[k];
        (c / self.right.dim(), c % self.right.dim())
    }

    /// Class of the pure tensor `m_i (x) n_j`.
    pub fn class(&self, i: usize, j: usize) -> &SparseVec {
        let classes = self.classes.get_or_init(|| {
            let field = self.field();
            (0..self.ambient_dim())
                .map(|c| {
                    let one = field.one();
                    SparseVec::from_dense(&self.quot.project_entries([(c, &one)]))
                })
                .collect()
        });
        &classes[i * self.right.dim() + j]
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.quot.project(v)
    }

    pub fn project_rows(&self, m: &Mat) -> Mat {
        self.quot.project_rows(m)
    }

    pub fn lift(&self, q: &[Scalar]) -> Vec<Scalar> {
        self.quot.lift(q)
    }

    /// Class of `u (x) w` for factor vectors `u`, `w`.
    pub fn pure(&self, u: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let mut amb = vec![self.field().zero(); self.ambient_dim()];
        add_pure(&mut amb, &self.field().one(), u, w);
        self.quot.project(&amb)
    }

    /// The map induced on quotients by `f (x)_k g`, after checking that the
    /// relations of `self` land in the relations of `target`.
    pub fn induced(&self, f: &Mat, g: &Mat, target: &PresentedTensor) -> Result<Mat> {
        let (m, n) = (self.left.dim(), self.right.dim());
        if f.rows() != m || g.rows() != n {
            return Err(Error::DimensionMismatch {
                expected: m * n,
                found: f.rows() * g.rows(),
            });
        }
        if f.cols() != target.left.dim() || g.cols() != target.right.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.ambient_dim(),
                found: f.cols() * g.cols(),
            });
        }
        for r in self.quot.relations().sparse_rows() {
            let v = sparse_kron_apply(f, g, r, n);
            if !target.quot.project(&v).iter().all(Scalar::is_zero) {
                let (i, j) = (r.leading().unwrap().0 / n, r.leading().unwrap().0 % n);
                return Err(Error::DescentFailure(format!(
                    "relation through {}⊗{} is not preserved",
                    self.left.labels()[i],
                    self.right.labels()[j]
                )));
            }
        }
        let rows = (0..self.dim())
            .map(|k| {
                let (i, j) = self.rep(k);
                target.pure(f.row(i), g.row(j))
            })
            .collect();
        Mat::from_rows(self.field(), target.dim(), rows)
    }
}

fn unit_row(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

fn pure_sparse(u: &[Scalar], w: &[Scalar]) -> SparseVec {
    let n = w.len();
    let mut pairs = Vec::new();
    for (a, x) in u.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (b, y) in w.iter().enumerate() {
            if !y.is_zero() {
                pairs.push((a * n + b, x * y));
            }
        }
    }
    SparseVec::from_pairs(pairs)
}

fn induced_rows(quot: &QuotientSpace, n: usize, image: impl Fn(usize, usize) -> SparseVec) -> Mat {
    let rows = quot
        .rep_columns()
        .iter()
        .map(|&c| quot.project_sparse(&image(c / n, c % n)))
        .collect();
    Mat::from_rows(quot.field(), quot.dim(), rows).expect("quotient width")
}

fn sparse_kron_apply(f: &Mat, g: &Mat, v: &SparseVec, n: usize) -> Vec<Scalar> {
    let mut out = vec![f.field().zero(); f.cols() * g.cols()];
    for (idx, x) in v.entries() {
        add_pure(&mut out, x, f.row(idx / n), g.row(idx % n));
    }
    out
}

fn balancing_relations<'a>(
    left: &'a Bimodule,
    right: &'a Bimodule,
    over: &'a Algebra,
) -> impl Iterator<Item = SparseVec> + 'a {
    let (m, n) = (left.dim(), right.dim());
    (0..m).flat_map(move |i| {
        (0..over.dim()).flat_map(move |t| {
            (0..n).map(move |j| {
                let mut pairs = Vec::new();
                for (u, x) in left.right_act(t).row(i).iter().enumerate() {
                    if !x.is_zero() {
                        pairs.push((u * n + j, x.clone()));
                    }
                }
                for (w, y) in right.left_act(t).row(j).iter().enumerate() {
                    if !y.is_zero() {
                        pairs.push((i * n + w, -y));
                    }
                }
                SparseVec::from_pairs(pairs)
            })
        })
    })
}

/// `M (x)_B N` with both induced actions verified.
pub fn tensor_over_alg(m: Arc<Bimodule>, n: Arc<Bimodule>) -> Result<PresentedTensor> {
    let t = PresentedTensor::new(m, n)?;
    t.verify_actions()?;
    Ok(t)
}

/// `f (x)_B g` between two presented tensors, as a bimodule map.
pub fn induced_map_on_tensor(
    f: &BimoduleMorphism,
    g: &BimoduleMorphism,
    src: &PresentedTensor,
    tgt: &PresentedTensor,
) -> Result<BimoduleMorphism> {
    if f.source() != src.left() || g.source() != src.right() || f.target() != tgt.left() || g.target() != tgt.right() {
        return Err(Error::ObjectMismatch("maps do not match the tensor factors".into()));
    }
    let map = src.induced(f.map(), g.map(), tgt)?;
    BimoduleMorphism::new(src.result().clone(), tgt.result().clone(), map)
}

/// `A (x)_A M -> M`, `a (x) m -> a m`, checked to be bijective and bilinear.
pub fn left_unitor(m: Arc<Bimodule>) -> Result<(PresentedTensor, BimoduleMorphism)> {
    let a = Arc::new(Bimodule::regular(m.left_alg().clone()));
    let t = PresentedTensor::new(a, m.clone())?;
    let rows = (0..t.dim())
        .map(|k| {
            let (i, j) = t.rep(k);
            m.left_act(i).row(j).to_vec()
        })
        .collect();
    let map = Mat::from_rows(m.field(), m.dim(), rows)?;
    finish_unitor(t, m, map)
}

/// `M (x)_B B -> M`, `m (x) b -> m b`.
pub fn right_unitor(m: Arc<Bimodule>) -> Result<(PresentedTensor, BimoduleMorphism)> {
    let b = Arc::new(Bimodule::regular(m.right_alg().clone()));
    let t = PresentedTensor::new(m.clone(), b)?;
    let rows = (0..t.dim())
        .map(|k| {
            let (i, j) = t.rep(k);
            m.right_act(j).row(i).to_vec()
        })
        .collect();
    let map = Mat::from_rows(m.field(), m.dim(), rows)?;
    finish_unitor(t, m, map)
}

fn finish_unitor(t: PresentedTensor, m: Arc<Bimodule>, map: Mat) -> Result<(PresentedTensor, BimoduleMorphism)> {
    if map.inverse().is_none() {
        return Err(Error::IsoFailure("unit map is not bijective".into()));
    }
    check_linear(t.result(), &m, &map).map_err(Error::NotLinear)?;
    let f = BimoduleMorphism::new(t.result().clone(), m, map)?;
    Ok((t, f))
}

/// The reassociation `(M (x) N) (x) P -> M (x) (N (x) P)` between the two
/// presented triple tensors, checked against the opposite reassociation.
pub struct Associator {
    pub left_assoc: PresentedTensor,
    pub right_assoc: PresentedTensor,
    pub map: Mat,
    pub inverse: Mat,
}

pub fn associator(m: Arc<Bimodule>, n: Arc<Bimodule>, p: Arc<Bimodule>) -> Result<Associator> {
    let field = m.field();
    let mn = PresentedTensor::new(m.clone(), n.clone())?;
    let np = PresentedTensor::new(n.clone(), p.clone())?;
    let left_assoc = PresentedTensor::new(mn.result().clone(), p.clone())?;
    let right_assoc = PresentedTensor::new(m.clone(), np.result().clone())?;
    let rows = (0..left_assoc.dim())
        .map(|k| {
            let (q, l) = left_assoc.rep(k);
            let (i, j) = mn.rep(q);
            let inner = np.class(j, l).to_dense(field, np.dim());
            right_assoc.pure(&unit_row(field, m.dim(), i), &inner)
        })
        .collect();
    let map = Mat::from_rows(field, right_assoc.dim(), rows)?;
    let rows = (0..right_assoc.dim())
        .map(|k| {
            let (i, q) = right_assoc.rep(k);
            let (j, l) = np.rep(q);
            let inner = mn.class(i, j).to_dense(field, mn.dim());
            left_assoc.pure(&inner, &unit_row(field, p.dim(), l))
        })
        .collect();
    let inverse = Mat::from_rows(field, left_assoc.dim(), rows)?;
    let n1 = left_assoc.dim();
    let n2 = right_assoc.dim();
    if map.mul(&inverse) != Mat::identity(field, n1) || inverse.mul(&map) != Mat::identity(field, n2) {
        return Err(Error::IsoFailure("reassociation maps are not mutually inverse".into()));
    }
    check_linear(left_assoc.result(), right_assoc.result(), &map).map_err(Error::NotLinear)?;
    Ok(Associator {
        left_assoc,
        right_assoc,
        map,
        inverse,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::Algebra;

    fn dual(f: Field) -> Arc<Algebra> {
        Arc::new(Algebra::dual_numbers(f))
    }

    #[test]
    fn dual_numbers_over_themselves() {
        let a = Arc::new(Bimodule::regular(dual(Field::Rationals)));
        let t = tensor_over_alg(a.clone(), a.clone()).unwrap();
        assert_eq!(t.ambient_dim(), 4);
        assert_eq!(t.relations().dim(), 2);
        assert_eq!(t.dim(), 2);
        assert_eq!(t.result().check(), Ok(()));
    }

    #[test]
    fn over_ground_field_is_tensor_over_k() {
        let f = Field::Prime(5);
        let m = Arc::new(Bimodule::regular(dual(f)).left_module());
        let n = Arc::new(Bimodule::regular(dual(f)).right_module());
        let t = tensor_over_alg(m.clone(), n.clone()).unwrap();
        assert_eq!(t.relations().dim(), 0);
        assert_eq!(**t.result(), tensor_over_k(&m, &n).unwrap());
    }

    #[test]
    fn regular_tensor_over_k_is_tensor_algebra() {
        let f = Field::Rationals;
        let a = dual(f);
        let b = Arc::new(Algebra::upper_triangular(f));
        let t = tensor_over_k(&Bimodule::regular(a.clone()), &Bimodule::regular(b.clone())).unwrap();
        assert_eq!(t, Bimodule::regular(Arc::new(a.tensor(&b).unwrap())));
    }

    #[test]
    fn ground_factor_collapses() {
        let f = Field::Rationals;
        let m = Bimodule::regular(Arc::new(Algebra::upper_triangular(f)));
        let k = Bimodule::regular(Arc::new(Algebra::ground(f)));
        assert_eq!(tensor_over_k(&k, &m).unwrap(), m);
        assert_eq!(tensor_over_k(&m, &k).unwrap(), m);
    }

    #[test]
    fn unitors_are_isomorphisms() {
        for f in [Field::Rationals, Field::Prime(5)] {
            let tri = Arc::new(Bimodule::regular(Arc::new(Algebra::upper_triangular(f))));
            let (t, u) = left_unitor(tri.clone()).unwrap();
            assert_eq!(t.dim(), 3);
            assert_eq!(u.check(), Ok(()));
            let (t, _) = right_unitor(tri).unwrap();
            assert_eq!(t.dim(), 3);
        }
    }

    #[test]
    fn identity_induces_identity() {
        let f = Field::Rationals;
        let a = Arc::new(Bimodule::regular(Arc::new(Algebra::upper_triangular(f))));
        let t = PresentedTensor::new(a.clone(), a.clone()).unwrap();
        let id = Mat::identity(f, 3);
        assert_eq!(t.induced(&id, &id, &t).unwrap(), Mat::identity(f, t.dim()));
    }

    #[test]
    fn non_balanced_map_fails_descent() {
        let f = Field::Rationals;
        let a = Arc::new(Bimodule::regular(dual(f)));
        let t = PresentedTensor::new(a.clone(), a.clone()).unwrap();
        // swaps 1 and x: not right A-linear
        let swap = Mat::from_i64(f, &[&[0, 1], &[1, 0]]);
        let id = Mat::identity(f, 2);
        assert!(matches!(t.induced(&swap, &id, &t), Err(Error::DescentFailure(_))));
    }

    #[test]
    fn associator_on_upper_triangular() {
        let f = Field::Prime(5);
        let a = Arc::new(Bimodule::regular(Arc::new(Algebra::upper_triangular(f))));
        let assoc = associator(a.clone(), a.clone(), a).unwrap();
        assert_eq!(assoc.left_assoc.dim(), 3);
    }

    #[test]
    fn kron_apply_matches_kron() {
        let f = Field::Rationals;
        let x = Mat::from_i64(f, &[&[1, 2], &[0, 3]]);
        let y = Mat::from_i64(f, &[&[1, 0, 1], &[2, 1, 0]]);
        let v: Vec<Scalar> = [1, -1, 2, 5].iter().map(|&n| f.from_i64(n)).collect();
        assert_eq!(kron_apply(&x, &y, &v), x.kron(&y).apply(&v));
    }
}
