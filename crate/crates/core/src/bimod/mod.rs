//! Finite-dimensional bimodules, their morphisms, and tensor products.

mod eta;
mod tensor;

use std::sync::Arc;

use crate::algcore::{Algebra, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::exactla::{format_vector, Field, Mat, Scalar};
use crate::verdict::{Verdict, Violation};

pub use eta::{check_eta_naturality, eta_map, random_hom, Eta, NaturalitySquare};
pub use tensor::{
    associator, induced_map_on_tensor, kron_apply, left_unitor, reshuffle_kron, right_unitor, tensor_over_alg,
    tensor_over_k, Associator, PresentedTensor,
};

/// An `(A, B)`-bimodule given by one action matrix per basis element of
/// each algebra. `left_act[i]` is `m -> a_i * m`, `right_act[j]` is `m -> m * b_j`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    dim: usize,
    left_act: Vec<Mat>,
    right_act: Vec<Mat>,
    labels: Vec<String>,
}

impl PartialEq for Bimodule {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.left == other.left
            && self.right == other.right
            && self.left_act == other.left_act
            && self.right_act == other.right_act
    }
}

impl Eq for Bimodule {}

impl Bimodule {
    pub fn new(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        left_act: Vec<Mat>,
        right_act: Vec<Mat>,
        labels: Vec<String>,
    ) -> Result<Bimodule> {
        let dim = labels.len();
        let field = left.field();
        if right.field() != field {
            return Err(Error::FieldMismatch);
        }
        for (acts, alg) in [(&left_act, &left), (&right_act, &right)] {
            if acts.len() != alg.dim() {
                return Err(Error::DimensionMismatch {
                    expected: alg.dim(),
                    found: acts.len(),
                });
            }
            for m in acts.iter() {
                if m.field() != field {
                    return Err(Error::FieldMismatch);
                }
                if m.rows() != dim || m.cols() != dim {
                    let found = if m.rows() != dim { m.rows() } else { m.cols() };
                    return Err(Error::DimensionMismatch { expected: dim, found });
                }
            }
        }
        Ok(Bimodule {
            left,
            right,
            dim,
            left_act,
            right_act,
            labels,
        })
    }

    /// `A` as an `(A, A)`-bimodule over itself.
    pub fn regular(a: Arc<Algebra>) -> Bimodule {
        let n = a.dim();
        let f = a.field();
        let left = (0..n)
            .map(|i| Mat::from_fn(f, n, n, |r, s| a.basis_product(i, r)[s].clone()))
            .collect();
        let right = (0..n)
            .map(|j| Mat::from_fn(f, n, n, |r, s| a.basis_product(r, j)[s].clone()))
            .collect();
        let labels = a.labels().to_vec();
        Bimodule {
            left: a.clone(),
            right: a,
            dim: n,
            left_act: left,
            right_act: right,
            labels,
        }
    }

    /// A vector space with scalar actions of the ground field on both sides.
    pub fn vector_space(field: Field, labels: Vec<String>) -> Bimodule {
        let k = Arc::new(Algebra::ground(field));
        let id = vec![Mat::identity(field, labels.len())];
        Bimodule {
            left: k.clone(),
            right: k,
            dim: labels.len(),
            left_act: id.clone(),
            right_act: id,
            labels,
        }
    }

    pub fn field(&self) -> Field {
        self.left.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_alg(&self) -> &Arc<Algebra> {
        &self.left
    }

    pub fn right_alg(&self) -> &Arc<Algebra> {
        &self.right
    }

    pub fn left_act(&self, i: usize) -> &Mat {
        &self.left_act[i]
    }

    pub fn right_act(&self, j: usize) -> &Mat {
        &self.right_act[j]
    }

    pub fn left_acts(&self) -> &[Mat] {
        &self.left_act
    }

    pub fn right_acts(&self) -> &[Mat] {
        &self.right_act
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Bimodule {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    pub fn format(&self, v: &[Scalar]) -> String {
        format_vector(&self.labels, v)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field().zero(); self.dim];
        v[i] = self.field().one();
        v
    }

    /// The matrix of `m -> x * m`.
    pub fn left_action(&self, x: &[Scalar]) -> Mat {
        combine(self.field(), self.dim, &self.left_act, x)
    }

    /// The matrix of `m -> m * x`.
    pub fn right_action(&self, x: &[Scalar]) -> Mat {
        combine(self.field(), self.dim, &self.right_act, x)
    }

    /// `x * v` for an algebra element `x` and a module vector `v`.
    pub fn act_left(&self, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        act(self.field(), self.dim, &self.left_act, x, v)
    }

    /// `v * x`.
    pub fn act_right(&self, v: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        act(self.field(), self.dim, &self.right_act, x, v)
    }

    /// Module laws on each side, then commutation of the two actions.
    pub fn check(&self) -> Verdict {
        let f = self.field();
        let id = Mat::identity(f, self.dim);
        let (a, b) = (&self.left, &self.right);
        if self.left_action(a.unit()) != id {
            return Err(Violation::new("left-module", "1"));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.left_action(a.basis_product(i, j));
                let rhs = self.left_act[j].mul(&self.left_act[i]);
                if let Some(r) = lhs.first_differing_row(&rhs) {
                    let w = format!("({}, {}, {})", a.labels()[i], a.labels()[j], self.labels[r]);
                    return Err(
                        Violation::new("left-module", w).with_sides(self.format(rhs.row(r)), self.format(lhs.row(r)))
                    );
                }
            }
        }
        if self.right_action(b.unit()) != id {
            return Err(Violation::new("right-module", "1"));
        }
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                let lhs = self.right_action(b.basis_product(i, j));
                let rhs = self.right_act[i].mul(&self.right_act[j]);
                if let Some(r) = lhs.first_differing_row(&rhs) {
                    let w = format!("({}, {}, {})", self.labels[r], b.labels()[i], b.labels()[j]);
                    return Err(
                        Violation::new("right-module", w).with_sides(self.format(rhs.row(r)), self.format(lhs.row(r)))
                    );
                }
            }
        }
        for i in 0..a.dim() {
            for j in 0..b.dim() {
                let lr = self.left_act[i].mul(&self.right_act[j]);
                let rl = self.right_act[j].mul(&self.left_act[i]);
                if let Some(r) = lr.first_differing_row(&rl) {
                    let w = format!("({}, {}, {})", a.labels()[i], self.labels[r], b.labels()[j]);
                    return Err(
                        Violation::new("compatibility", w).with_sides(self.format(rl.row(r)), self.format(lr.row(r)))
                    );
                }
            }
        }
        Ok(())
    }

    /// Restriction of scalars along `f: A' -> A` on the left and `g: B' -> B` on the right.
    pub fn restrict(&self, f: &AlgebraMorphism, g: &AlgebraMorphism) -> Result<Bimodule> {
        if **f.target() != *self.left || **g.target() != *self.right {
            return Err(Error::AlgebraMismatch(
                "restriction maps must land in the acting algebras".into(),
            ));
        }
        let left = (0..f.source().dim())
            .map(|i| self.left_action(f.map().row(i)))
            .collect();
        let right = (0..g.source().dim())
            .map(|j| self.right_action(g.map().row(j)))
            .collect();
        Bimodule::new(f.source().clone(), g.source().clone(), left, right, self.labels.clone())
    }

    pub fn restrict_left(&self, f: &AlgebraMorphism) -> Result<Bimodule> {
        self.restrict(f, &AlgebraMorphism::identity(self.right.clone()))
    }

    pub fn restrict_right(&self, g: &AlgebraMorphism) -> Result<Bimodule> {
        self.restrict(&AlgebraMorphism::identity(self.left.clone()), g)
    }

    /// The underlying right module, with the ground field acting on the left.
    pub fn right_module(&self) -> Bimodule {
        let k = Arc::new(Algebra::ground(self.field()));
        Bimodule {
            left: k,
            right: self.right.clone(),
            dim: self.dim,
            left_act: vec![Mat::identity(self.field(), self.dim)],
            right_act: self.right_act.clone(),
            labels: self.labels.clone(),
        }
    }

    /// The underlying left module, with the ground field acting on the right.
    pub fn left_module(&self) -> Bimodule {
        let k = Arc::new(Algebra::ground(self.field()));
        Bimodule {
            left: self.left.clone(),
            right: k,
            dim: self.dim,
            left_act: self.left_act.clone(),
            right_act: vec![Mat::identity(self.field(), self.dim)],
            labels: self.labels.clone(),
        }
    }

    /// Same left action, new right algebra and action.
    pub fn with_right_action(&self, right: Arc<Algebra>, right_act: Vec<Mat>) -> Result<Bimodule> {
        Bimodule::new(
            self.left.clone(),
            right,
            self.left_act.clone(),
            right_act,
            self.labels.clone(),
        )
    }
}

fn combine(field: Field, dim: usize, acts: &[Mat], x: &[Scalar]) -> Mat {
    let mut out = Mat::zeros(field, dim, dim);
    for (c, m) in x.iter().zip(acts) {
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

fn act(field: Field, dim: usize, acts: &[Mat], x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); dim];
    for (c, m) in x.iter().zip(acts) {
        if c.is_zero() {
            continue;
        }
        for (j, y) in m.apply(v).iter().enumerate() {
            out[j].add_mul(c, y);
        }
    }
    out
}

/// A linear map between bimodules over the same pair of algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleMorphism {
    source: Arc<Bimodule>,
    target: Arc<Bimodule>,
    map: Mat,
}

impl BimoduleMorphism {
    pub fn new(source: Arc<Bimodule>, target: Arc<Bimodule>, map: Mat) -> Result<Self> {
        if source.left_alg() != target.left_alg() || source.right_alg() != target.right_alg() {
            return Err(Error::AlgebraMismatch(
                "source and target are modules over different algebras".into(),
            ));
        }
        if map.field() != source.field() {
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
        Ok(BimoduleMorphism { source, target, map })
    }

    pub fn identity(m: Arc<Bimodule>) -> Self {
        let map = Mat::identity(m.field(), m.dim());
        BimoduleMorphism {
            source: m.clone(),
            target: m,
            map,
        }
    }

    pub fn source(&self) -> &Arc<Bimodule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Bimodule> {
        &self.target
    }

    pub fn map(&self) -> &Mat {
        &self.map
    }

    /// "First `self`, then `next`".
    pub fn then(&self, next: &BimoduleMorphism) -> Result<BimoduleMorphism> {
        if self.target != next.source {
            return Err(Error::ObjectMismatch("bimodule maps are not composable".into()));
        }
        BimoduleMorphism::new(self.source.clone(), next.target.clone(), self.map.mul(&next.map))
    }

    pub fn check(&self) -> Verdict {
        check_linear(&self.source, &self.target, &self.map)
    }
}

/// Checks that `map` commutes with the left and right actions of `source` and `target`.
pub fn check_linear(source: &Bimodule, target: &Bimodule, map: &Mat) -> Verdict {
    check_left_linear(source, target, map)?;
    check_right_linear(source, target, map)
}

pub fn check_left_linear(source: &Bimodule, target: &Bimodule, map: &Mat) -> Verdict {
    let a = source.left_alg();
    for i in 0..a.dim() {
        let lhs = source.left_act(i).mul(map);
        let rhs = map.mul(target.left_act(i));
        if let Some(r) = lhs.first_differing_row(&rhs) {
            let w = format!("{}*{}", a.labels()[i], source.labels()[r]);
            return Err(
                Violation::new("left-linearity", w).with_sides(target.format(rhs.row(r)), target.format(lhs.row(r)))
            );
        }
    }
    Ok(())
}

pub fn check_right_linear(source: &Bimodule, target: &Bimodule, map: &Mat) -> Verdict {
    let b = source.right_alg();
    for j in 0..b.dim() {
        let lhs = source.right_act(j).mul(map);
        let rhs = map.mul(target.right_act(j));
        if let Some(r) = lhs.first_differing_row(&rhs) {
            let w = format!("{}*{}", source.labels()[r], b.labels()[j]);
            return Err(
                Violation::new("right-linearity", w).with_sides(target.format(rhs.row(r)), target.format(lhs.row(r)))
            );
        }
    }
    Ok(())
}

/// A basis of the space of bimodule maps `m -> n`.
pub fn hom_space(m: &Bimodule, n: &Bimodule) -> Vec<Mat> {
    let f = m.field();
    let (p, q) = (m.dim(), n.dim());
    let unknowns = p * q;
    // Each constraint `S F - F T = 0` contributes p*q equations (columns).
    let mut pairs: Vec<(&Mat, &Mat)> = Vec::new();
    pairs.extend(m.left_acts().iter().zip(n.left_acts()));
    pairs.extend(m.right_acts().iter().zip(n.right_acts()));
    let mut system = Mat::zeros(f, unknowns, pairs.len() * unknowns);
    for (c, (s, t)) in pairs.iter().enumerate() {
        let base = c * unknowns;
        for r in 0..p {
            for col in 0..q {
                let eq = base + r * q + col;
                // (S F)_{r,col} = sum_u S[r,u] F[u,col]
                for u in 0..p {
                    let x = s.get(r, u);
                    if !x.is_zero() {
                        let idx = u * q + col;
                        let cur = system.get(idx, eq).clone();
                        system.set(idx, eq, &cur + x);
                    }
                }
                // (F T)_{r,col} = sum_u F[r,u] T[u,col]
                for u in 0..q {
                    let x = t.get(u, col);
                    if !x.is_zero() {
                        let idx = r * q + u;
                        let cur = system.get(idx, eq).clone();
                        system.set(idx, eq, &cur - x);
                    }
                }
            }
        }
    }
    let sol = system.left_kernel();
    sol.sparse_rows()
        .iter()
        .map(|v| {
            let dense = v.to_dense(f, unknowns);
            Mat::from_fn(f, p, q, |r, c| dense[r * q + c].clone())
        })
        .collect()
}
