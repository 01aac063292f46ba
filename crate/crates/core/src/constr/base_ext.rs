use std::sync::Arc;

use super::extension::{make_right_extension, RightExtension};
use crate::algcore::Algebra;
use crate::bimod::{Bimodule, PresentedTensor};
use crate::cat::CoringsMorphism;
use crate::coring::Coring;
use crate::error::{Error, Result};
use crate::exactla::{kron_vec, Mat, Scalar};

/// The `B`-coring `B (x)_A C (x)_A B` of a corings morphism `(C : A) -> (D : B)`,
/// with `D` as a right extension of it.
#[derive(Clone, Debug)]
pub struct BaseRingExtension {
    b: Arc<Algebra>,
    inner: PresentedTensor,
    outer: PresentedTensor,
    coring: Arc<Coring>,
    extension: RightExtension,
}

impl BaseRingExtension {
    /// `B (x)_A C`.
    pub fn inner(&self) -> &PresentedTensor {
        &self.inner
    }

    /// `(B (x)_A C) (x)_A B`.
    pub fn outer(&self) -> &PresentedTensor {
        &self.outer
    }

    pub fn coring(&self) -> &Arc<Coring> {
        &self.coring
    }

    pub fn extension(&self) -> &RightExtension {
        &self.extension
    }

    /// Coordinates of `b (x) c (x) b'` in the carrier.
    pub fn pure(&self, b: &[Scalar], c: &[Scalar], b2: &[Scalar]) -> Vec<Scalar> {
        self.outer.pure(&self.inner.pure(b, c), b2)
    }

    /// Representative `(b, c, b')` of the `k`-th carrier basis vector, as basis indices.
    pub fn rep(&self, k: usize) -> (usize, usize, usize) {
        let (q, b2) = self.outer.rep(k);
        let (b, c) = self.inner.rep(q);
        (b, c, b2)
    }

    /// The algebra `B`.
    pub fn base(&self) -> &Arc<Algebra> {
        &self.b
    }
}

/// `Delta(b (x) c (x) b') = (b (x) c_(1) (x) 1) (x)_B (1 (x) c_(2) (x) b')`,
/// `epsilon(b (x) c (x) b') = b phi(epsilon(c)) b'`, and the `D`-coaction
/// `b (x) c_(1) (x) 1 (x)_B phi(c_(2)) b'`.
pub fn base_ring_extension(m: &CoringsMorphism) -> Result<BaseRingExtension> {
    m.check().map_err(Error::InvalidMorphism)?;
    let c = m.source();
    let d = m.target();
    let varphi = m.varphi();
    let b = varphi.target().clone();
    let field = c.field();
    let reg = Bimodule::regular(b.clone());
    let b_ba = Arc::new(reg.restrict_right(varphi)?);
    let b_ab = Arc::new(reg.restrict_left(varphi)?);
    let inner = PresentedTensor::new(b_ba, c.carrier().clone())?;
    inner.verify_actions()?;
    let outer = PresentedTensor::new(inner.result().clone(), b_ab)?;
    outer.verify_actions()?;
    let carrier = outer.result().clone();
    let n = outer.dim();

    let rep = |k: usize| {
        let (q, b2) = outer.rep(k);
        let (b, c) = inner.rep(q);
        (b, c, b2)
    };
    let pure = |x: &[Scalar], c: usize, y: &[Scalar]| outer.pure(&inner.pure(x, &inner.right().basis_vector(c)), y);

    let unit = b.unit();
    let mut lift_rows = Vec::with_capacity(n);
    let mut counit_rows = Vec::with_capacity(n);
    let mut coact_rows = Vec::with_capacity(n);
    for k in 0..n {
        let (bi, ci, bj) = rep(k);
        let (ei, ej) = (b.basis_vector(bi), b.basis_vector(bj));
        let mut lift = vec![field.zero(); n * n];
        let mut coact = vec![field.zero(); n * d.dim()];
        for (c1, c2, x) in c.sweedler(ci) {
            let left = pure(&ei, c1, unit);
            let right = pure(unit, c2, &ej);
            let phi_c2 = d.carrier().act_right(m.phi().row(c2), &ej);
            for (o, y) in lift.iter_mut().zip(kron_vec(&left, &right)) {
                o.add_mul(&x, &y);
            }
            for (o, y) in coact.iter_mut().zip(kron_vec(&left, &phi_c2)) {
                o.add_mul(&x, &y);
            }
        }
        lift_rows.push(lift);
        coact_rows.push(coact);
        let eps = varphi.apply(c.counit().row(ci));
        counit_rows.push(b.mul(&b.mul(&ei, &eps), &ej));
    }
    let lift = Mat::from_rows(field, n * n, lift_rows)?;
    let counit = Mat::from_rows(field, b.dim(), counit_rows)?;
    let coring = Arc::new(Coring::new(carrier.clone(), lift, counit)?);
    let coact = Mat::from_rows(field, n * d.dim(), coact_rows)?;
    let extension = make_right_extension(coring.clone(), d.clone(), carrier.right_acts().to_vec(), coact)?;
    Ok(BaseRingExtension {
        b,
        inner,
        outer,
        coring,
        extension,
    })
}
