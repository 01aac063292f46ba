use std::sync::Arc;

use super::corings::CoringsMorphism;
use super::ext::ExtMorphism;
use crate::algcore::AlgebraMorphism;
use crate::constr::{base_ring_extension, BaseRingExtension};
use crate::coring::Coring;
use crate::error::{Error, Result};
use crate::exactla::Mat;

/// The base ring extension of `m`, as an extension morphism
/// `(B (x)_A C (x)_A B : B) -> (D : B)` acting by right multiplication.
pub fn corings_to_ext(m: &CoringsMorphism) -> Result<ExtMorphism> {
    Ok(base_ring_extension(m)?.extension().clone().into())
}

/// `b (x) c (x) b' -> bcb'` from the base ring extension of an identity
/// morphism back onto `C`, as a morphism of corings over `A`.
pub fn multiplication_iso(ext: &BaseRingExtension, c: &Arc<Coring>) -> Result<CoringsMorphism> {
    let e = ext.coring();
    if e.base() != c.base() {
        return Err(Error::AlgebraMismatch(
            "expected the base ring extension of an identity".into(),
        ));
    }
    let a = c.base();
    let carrier = c.carrier();
    let rows = (0..e.dim())
        .map(|k| {
            let (b, ci, b2) = ext.rep(k);
            let cb = carrier.act_right(&carrier.basis_vector(ci), &a.basis_vector(b2));
            carrier.act_left(&a.basis_vector(b), &cb)
        })
        .collect();
    let psi = Mat::from_rows(c.field(), c.dim(), rows)?;
    let id = AlgebraMorphism::new(e.base().clone(), c.base().clone(), Mat::identity(c.field(), a.dim()))?;
    CoringsMorphism::new(e.clone(), c.clone(), psi, id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{ext_compose, ext_identity};
    use crate::constr::fixtures::matrix_coalgebra;
    use crate::exactla::Field;

    #[test]
    fn identity_recovers_ext_identity() {
        let f = Field::Prime(5);
        let c = Arc::new(matrix_coalgebra(f, 2));
        let id = CoringsMorphism::identity(c.clone());
        let ext = base_ring_extension(&id).unwrap();
        let as_ext: ExtMorphism = ext.extension().clone().into();
        assert_eq!(as_ext.check(), Ok(()));
        let psi = multiplication_iso(&ext, &c).unwrap();
        assert_eq!(psi.check(), Ok(()));
        let inv = psi.phi().inverse().unwrap();
        let back = CoringsMorphism::new(c.clone(), ext.coring().clone(), inv, psi.varphi().inverse().unwrap()).unwrap();
        let back = ExtMorphism::from_coring_iso(&back).unwrap();
        assert_eq!(ext_compose(&as_ext, &back).unwrap(), ext_identity(c));
    }
}
