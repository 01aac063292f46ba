use std::sync::Arc;

use crate::algcore::AlgebraMorphism;
use crate::bimod::{check_linear, PresentedTensor};
use crate::constr::tensor_coring;
use crate::coring::Coring;
use crate::error::{Error, Result};
use crate::exactla::Mat;
use crate::verdict::{Verdict, Violation};

/// A morphism `(C : A) -> (D : B)`: an algebra map `varphi: A -> B` and a
/// linear map `phi: C -> D` compatible with both structures.
#[derive(Clone, Debug, PartialEq)]
pub struct CoringsMorphism {
    source: Arc<Coring>,
    target: Arc<Coring>,
    phi: Mat,
    varphi: AlgebraMorphism,
}

impl CoringsMorphism {
    /// Shape checks only; see [`CoringsMorphism::check`].
    pub fn new(source: Arc<Coring>, target: Arc<Coring>, phi: Mat, varphi: AlgebraMorphism) -> Result<Self> {
        if source.field() != target.field() || phi.field() != source.field() {
            return Err(Error::FieldMismatch);
        }
        if varphi.source() != source.base() || varphi.target() != target.base() {
            return Err(Error::AlgebraMismatch(
                "algebra map does not join the two base algebras".into(),
            ));
        }
        if phi.rows() != source.dim() {
            return Err(Error::DimensionMismatch {
                expected: source.dim(),
                found: phi.rows(),
            });
        }
        if phi.cols() != target.dim() {
            return Err(Error::DimensionMismatch {
                expected: target.dim(),
                found: phi.cols(),
            });
        }
        Ok(CoringsMorphism {
            source,
            target,
            phi,
            varphi,
        })
    }

    pub fn identity(c: Arc<Coring>) -> Self {
        let phi = Mat::identity(c.field(), c.dim());
        let varphi = AlgebraMorphism::identity(c.base().clone());
        CoringsMorphism {
            source: c.clone(),
            target: c,
            phi,
            varphi,
        }
    }

    /// `(epsilon, id): (C : A) -> (A : A)`.
    pub fn counit(c: Arc<Coring>) -> Self {
        let a = c.base().clone();
        let phi = c.counit().clone();
        let target = Arc::new(Coring::trivial(a.clone()));
        CoringsMorphism {
            source: c,
            target,
            phi,
            varphi: AlgebraMorphism::identity(a),
        }
    }

    pub fn source(&self) -> &Arc<Coring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Coring> {
        &self.target
    }

    pub fn phi(&self) -> &Mat {
        &self.phi
    }

    pub fn varphi(&self) -> &AlgebraMorphism {
        &self.varphi
    }

    /// Algebra map, `A`-bilinearity of `phi`, the counit square and
    /// `Delta_D phi = omega (phi (x)_A phi) Delta_C`, in that order.
    pub fn check(&self) -> Verdict {
        self.varphi.check().map_err(|v| v.within("algebra-map", "varphi"))?;
        let d_a = Arc::new(self.target.carrier().restrict(&self.varphi, &self.varphi)?);
        check_linear(self.source.carrier(), &d_a, &self.phi).map_err(|v| v.within("bilinearity", "phi"))?;

        let lhs = self.phi.mul(self.target.counit());
        let rhs = self.source.counit().mul(self.varphi.map());
        if let Some(r) = lhs.first_differing_row(&rhs) {
            let b = self.target.base();
            return Err(Violation::new("counit", self.source.labels()[r].clone())
                .with_sides(b.format(rhs.row(r)), b.format(lhs.row(r))));
        }

        // D (x)_A D, then omega down to D (x)_B D
        let over_a = PresentedTensor::new(d_a.clone(), d_a)?;
        let phi_phi = self.source.tens().induced(&self.phi, &self.phi, &over_a)?;
        let id = Mat::identity(self.phi.field(), self.target.dim());
        let omega = over_a.induced(&id, &id, self.target.tens())?;
        let lhs = self.phi.mul(self.target.comul());
        let rhs = self.source.comul().mul(&phi_phi).mul(&omega);
        if let Some(r) = lhs.first_differing_row(&rhs) {
            let t = self.target.tens();
            return Err(Violation::new("comultiplication", self.source.labels()[r].clone())
                .with_sides(t.format(rhs.row(r)), t.format(lhs.row(r))));
        }
        Ok(())
    }
}

pub fn check_corings_morphism(m: &CoringsMorphism) -> Verdict {
    m.check()
}

/// `g . f`, componentwise.
pub fn corings_compose(g: &CoringsMorphism, f: &CoringsMorphism) -> Result<CoringsMorphism> {
    if f.target != g.source {
        return Err(Error::ObjectMismatch("corings morphisms are not composable".into()));
    }
    let varphi = f.varphi.then(&g.varphi)?;
    CoringsMorphism::new(f.source.clone(), g.target.clone(), f.phi.mul(&g.phi), varphi)
}

/// `(phi (x) phi', varphi (x) varphi')` between tensor corings.
pub fn corings_tensor_morphisms(m: &CoringsMorphism, m2: &CoringsMorphism) -> Result<CoringsMorphism> {
    if m.source.field() != m2.source.field() {
        return Err(Error::FieldMismatch);
    }
    let source = Arc::new(tensor_coring(&m.source, &m2.source)?);
    let target = Arc::new(tensor_coring(&m.target, &m2.target)?);
    CoringsMorphism::new(source, target, m.phi.kron(&m2.phi), m.varphi.tensor(&m2.varphi)?)
}
