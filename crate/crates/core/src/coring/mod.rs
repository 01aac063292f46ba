//! Corings, comodules and the cotensor product.
//!
//! Comultiplications and coactions are stored as lifts into the ambient
//! `(x)_k` space; the structure maps themselves are their projections.
//! Iterated tensors are presented left-associated, and maps such as
//! `C (x)_A Delta` that land in the right-associated reading are evaluated
//! on pure tensors and pushed straight into the left-associated quotient.

mod comodule;
mod cotensor;

use std::sync::Arc;

use crate::algcore::Algebra;
use crate::bimod::{check_linear, Bimodule, PresentedTensor};
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, Scalar};
use crate::verdict::{Verdict, Violation};

pub use comodule::{check_left_colinear, Bicomodule, Comodule, Side};
pub use cotensor::{cotensor, Cotensor};

/// Axioms of a coring, in the order they are checked.
pub const CORING_AXIOMS: [&str; 4] = ["bilinearity", "coassociativity", "right-counit", "left-counit"];

/// An `A`-coring `(C, Delta, epsilon)`.
#[derive(Clone, Debug)]
pub struct Coring {
    carrier: Arc<Bimodule>,
    comul_lift: Mat,
    counit: Mat,
    tens: PresentedTensor,
    comul: Mat,
}

impl PartialEq for Coring {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.comul == other.comul && self.counit == other.counit
    }
}

impl Eq for Coring {}

impl Coring {
    /// Shape checks only; the axioms are checked by [`Coring::check`].
    pub fn new(carrier: Arc<Bimodule>, comul_lift: Mat, counit: Mat) -> Result<Coring> {
        if carrier.left_alg() != carrier.right_alg() {
            return Err(Error::AlgebraMismatch("a coring carrier is an (A, A)-bimodule".into()));
        }
        let n = carrier.dim();
        let a = carrier.left_alg().dim();
        for (m, rows, cols) in [(&comul_lift, n, n * n), (&counit, n, a)] {
            if m.field() != carrier.field() {
                return Err(Error::FieldMismatch);
            }
            if m.rows() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: m.rows(),
                });
            }
            if m.cols() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: m.cols(),
                });
            }
        }
        let tens = PresentedTensor::new(carrier.clone(), carrier.clone())?;
        let comul = tens.project_rows(&comul_lift);
        Ok(Coring {
            carrier,
            comul_lift,
            counit,
            tens,
            comul,
        })
    }

    /// The trivial coring `(A : A)`: `Delta(a) = a (x) 1`, `epsilon = id`.
    pub fn trivial(a: Arc<Algebra>) -> Coring {
        let f = a.field();
        let n = a.dim();
        let carrier = Arc::new(Bimodule::regular(a.clone()));
        let rows = (0..n)
            .map(|i| crate::exactla::kron_vec(&a.basis_vector(i), a.unit()))
            .collect();
        let lift = Mat::from_rows(f, n * n, rows).expect("square of the algebra");
        Coring::new(carrier, lift, Mat::identity(f, n)).expect("trivial coring is well shaped")
    }

    pub fn field(&self) -> Field {
        self.carrier.field()
    }

    pub fn base(&self) -> &Arc<Algebra> {
        self.carrier.left_alg()
    }

    pub fn carrier(&self) -> &Arc<Bimodule> {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.carrier.labels()
    }

    pub fn comul_lift(&self) -> &Mat {
        &self.comul_lift
    }

    /// `Delta` in the coordinates of the presented `C (x)_A C`.
    pub fn comul(&self) -> &Mat {
        &self.comul
    }

    pub fn counit(&self) -> &Mat {
        &self.counit
    }

    pub fn tens(&self) -> &PresentedTensor {
        &self.tens
    }

    /// `Delta(c_i)` as a list of `(j, k, x)` with `x c_j (x) c_k`, read off the lift.
    pub fn sweedler(&self, i: usize) -> Vec<(usize, usize, Scalar)> {
        let n = self.dim();
        self.comul_lift
            .row(i)
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(idx, x)| (idx / n, idx % n, x.clone()))
            .collect()
    }

    /// Same coring with new basis labels.
    pub fn with_labels(&self, labels: Vec<String>) -> Coring {
        let carrier = Arc::new((*self.carrier).clone().with_labels(labels));
        Coring::new(carrier, self.comul_lift.clone(), self.counit.clone()).expect("same shapes")
    }

    /// First violated axiom, in the order of [`CORING_AXIOMS`].
    pub fn check(&self) -> Verdict {
        self.check_bilinearity()?;
        self.check_coassociativity()?;
        self.check_right_counit()?;
        self.check_left_counit()
    }

    /// Per-axiom outcomes: `Some(verdict)` for checked axioms, `None` for those
    /// skipped after the first failure.
    pub fn check_axioms(&self) -> Vec<(&'static str, Option<Verdict>)> {
        let steps: [fn(&Coring) -> Verdict; 4] = [
            Coring::check_bilinearity,
            Coring::check_coassociativity,
            Coring::check_right_counit,
            Coring::check_left_counit,
        ];
        let mut failed = false;
        CORING_AXIOMS
            .iter()
            .zip(steps)
            .map(|(name, step)| {
                if failed {
                    return (*name, None);
                }
                let v = step(self);
                failed = v.is_err();
                (*name, Some(v))
            })
            .collect()
    }

    pub fn check_bilinearity(&self) -> Verdict {
        let within = |v: Violation, what: &str| v.within("bilinearity", what);
        self.carrier.check().map_err(|v| within(v, "carrier"))?;
        check_linear(&self.carrier, self.tens.result(), &self.comul).map_err(|v| within(v, "comultiplication"))?;
        let a = Bimodule::regular(self.base().clone());
        check_linear(&self.carrier, &a, &self.counit).map_err(|v| within(v, "counit"))
    }

    /// `(Delta (x) C) Delta = (C (x) Delta) Delta` in `(C (x)_A C) (x)_A C`.
    pub fn check_coassociativity(&self) -> Verdict {
        let triple = PresentedTensor::new(self.tens.result().clone(), self.carrier.clone())?;
        for c in 0..self.dim() {
            let row = self.comul_lift.row(c);
            let lhs = fuse_left(&triple, row, &self.comul);
            let rhs = fuse_right(&triple, &self.tens, row, &self.comul_lift);
            if lhs != rhs {
                let labels = &triple;
                return Err(Violation::new("coassociativity", self.labels()[c].clone())
                    .with_sides(labels.format(&rhs), labels.format(&lhs)));
            }
        }
        Ok(())
    }

    /// `(C (x) epsilon) Delta = id` through `C (x)_A A = C`.
    pub fn check_right_counit(&self) -> Verdict {
        for c in 0..self.dim() {
            let got = self.right_counit_leg(self.comul_lift.row(c));
            let want = self.carrier.basis_vector(c);
            if got != want {
                return Err(Violation::new("right-counit", self.labels()[c].clone())
                    .with_sides(self.carrier.format(&want), self.carrier.format(&got)));
            }
        }
        Ok(())
    }

    /// `(epsilon (x) C) Delta = id` through `A (x)_A C = C`.
    pub fn check_left_counit(&self) -> Verdict {
        for c in 0..self.dim() {
            let got = self.left_counit_leg(self.comul_lift.row(c));
            let want = self.carrier.basis_vector(c);
            if got != want {
                return Err(Violation::new("left-counit", self.labels()[c].clone())
                    .with_sides(self.carrier.format(&want), self.carrier.format(&got)));
            }
        }
        Ok(())
    }

    /// `c (x) c' -> c epsilon(c')` on an ambient vector of `C (x)_k C`.
    pub fn right_counit_leg(&self, v: &[Scalar]) -> Vec<Scalar> {
        right_counit_on(&self.carrier, self, v)
    }

    /// `c (x) c' -> epsilon(c) c'` on an ambient vector of `C (x)_k C`.
    pub fn left_counit_leg(&self, v: &[Scalar]) -> Vec<Scalar> {
        left_counit_on(self, &self.carrier, v)
    }

    /// `(C, Delta)` as a right comodule over itself.
    pub fn regular_right_comodule(self: &Arc<Self>) -> Comodule {
        Comodule::new(self.clone(), Side::Right, self.carrier.clone(), self.comul_lift.clone())
            .expect("regular coaction is well shaped")
    }

    /// `(C, Delta)` as a left comodule over itself.
    pub fn regular_left_comodule(self: &Arc<Self>) -> Comodule {
        Comodule::new(self.clone(), Side::Left, self.carrier.clone(), self.comul_lift.clone())
            .expect("regular coaction is well shaped")
    }
}

/// `m (x) c -> m epsilon(c)` on an ambient vector of `M (x)_k C`.
pub(crate) fn right_counit_on(m: &Bimodule, c: &Coring, v: &[Scalar]) -> Vec<Scalar> {
    let n = c.dim();
    let mut out = vec![m.field().zero(); m.dim()];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (i, j) = (idx / n, idx % n);
        let img = m.act_right(&m.basis_vector(i), c.counit().row(j));
        for (o, y) in out.iter_mut().zip(&img) {
            o.add_mul(x, y);
        }
    }
    out
}

/// `c (x) m -> epsilon(c) m` on an ambient vector of `C (x)_k M`.
pub(crate) fn left_counit_on(c: &Coring, m: &Bimodule, v: &[Scalar]) -> Vec<Scalar> {
    let n = m.dim();
    let mut out = vec![m.field().zero(); m.dim()];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (i, j) = (idx / n, idx % n);
        let img = m.act_left(c.counit().row(i), &m.basis_vector(j));
        for (o, y) in out.iter_mut().zip(&img) {
            o.add_mul(x, y);
        }
    }
    out
}

/// `(f (x) W)(v)` in `triple = T (x)_B W`, for `v` in the ambient `U (x)_k W`
/// and `f: U -> T` given in the quotient coordinates of `T`.
pub fn fuse_left(triple: &PresentedTensor, v: &[Scalar], f: &Mat) -> Vec<Scalar> {
    let w = triple.right().dim();
    assert_eq!(v.len(), f.rows() * w);
    let mut amb = vec![triple.field().zero(); triple.ambient_dim()];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (u, wi) = (idx / w, idx % w);
        for (q, y) in f.row(u).iter().enumerate() {
            if !y.is_zero() {
                amb[q * w + wi].add_mul(x, y);
            }
        }
    }
    triple.project(&amb)
}

/// `(U (x) h)(v)` in `triple = (U (x)_A V) (x)_B W` where `inner = U (x)_A V`,
/// `v` lies in the ambient `U (x)_k V''` and `h: V'' -> V (x)_k W` is an ambient lift.
pub fn fuse_right(triple: &PresentedTensor, inner: &PresentedTensor, v: &[Scalar], h: &Mat) -> Vec<Scalar> {
    let mid = h.rows();
    let w = triple.right().dim();
    assert_eq!(v.len(), inner.left().dim() * mid);
    assert_eq!(h.cols(), inner.right().dim() * w);
    let mut amb = vec![triple.field().zero(); triple.ambient_dim()];
    for (idx, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let (u, j) = (idx / mid, idx % mid);
        for (hidx, y) in h.row(j).iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let xy = x * y;
            let (vv, wi) = (hidx / w, hidx % w);
            for (q, z) in inner.class(u, vv).entries() {
                amb[q * w + wi].add_mul(&xy, z);
            }
        }
    }
    triple.project(&amb)
}
