use super::{fuse_left, fuse_right, Comodule, Side};
use crate::bimod::PresentedTensor;
use crate::error::{Error, Result};
use crate::exactla::{Mat, Scalar, Subspace};

/// `M []_C N`: the kernel of `rho (x) N - M (x) lambda` inside `M (x)_A N`.
#[derive(Clone, Debug)]
pub struct Cotensor {
    tensor: PresentedTensor,
    defect: Mat,
    subspace: Subspace,
}

impl Cotensor {
    /// The presented `M (x)_A N` the cotensor lives in.
    pub fn tensor(&self) -> &PresentedTensor {
        &self.tensor
    }

    /// `rho (x) N - M (x) lambda` into `(M (x)_A C) (x)_A N`.
    pub fn defect(&self) -> &Mat {
        &self.defect
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    /// Basis of the cotensor as rows in the coordinates of `M (x)_A N`.
    pub fn inclusion(&self) -> Mat {
        self.subspace.basis()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.subspace.contains(v)
    }
}

pub fn cotensor(m: &Comodule, n: &Comodule) -> Result<Cotensor> {
    if m.side() != Side::Right || n.side() != Side::Left {
        return Err(Error::ObjectMismatch(
            "cotensor needs a right and a left comodule".into(),
        ));
    }
    if m.coring() != n.coring() {
        return Err(Error::ObjectMismatch("comodules over different corings".into()));
    }
    let tensor = PresentedTensor::new(m.carrier().clone(), n.carrier().clone())?;
    let inner = m.tens();
    let triple = PresentedTensor::new(inner.result().clone(), n.carrier().clone())?;
    let field = tensor.field();
    let one = field.one();
    let rows = (0..tensor.dim())
        .map(|k| {
            let (i, j) = tensor.rep(k);
            let mut unit = vec![field.zero(); tensor.ambient_dim()];
            unit[i * n.dim() + j] = one.clone();
            let lhs = fuse_left(&triple, &unit, m.coact());
            let rhs = fuse_right(&triple, inner, &unit, n.coact_lift());
            lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect()
        })
        .collect();
    let defect = Mat::from_rows(field, triple.dim(), rows)?;
    let subspace = defect.left_kernel();
    Ok(Cotensor {
        tensor,
        defect,
        subspace,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algcore::Algebra;
    use crate::constr::fixtures::matrix_coalgebra;
    use crate::coring::Coring;
    use crate::exactla::Field;

    #[test]
    fn coalgebra_cotensor_itself() {
        let c = Arc::new(matrix_coalgebra(Field::Rationals, 2));
        let ct = cotensor(&c.regular_right_comodule(), &c.regular_left_comodule()).unwrap();
        assert_eq!(ct.dim(), c.dim());
        // Delta lands in the cotensor and is injective onto it
        let img = Subspace::span_rows(c.comul());
        assert_eq!(&img, ct.subspace());
    }

    #[test]
    fn trivial_coring_has_zero_defect() {
        let a = Arc::new(Algebra::dual_numbers(Field::Prime(5)));
        let t = Arc::new(Coring::trivial(a));
        let ct = cotensor(&t.regular_right_comodule(), &t.regular_left_comodule()).unwrap();
        assert!(ct.defect().is_zero());
        assert_eq!(ct.dim(), 2);
    }

    #[test]
    fn sides_are_checked() {
        let c = Arc::new(matrix_coalgebra(Field::Rationals, 2));
        let r = c.regular_right_comodule();
        assert!(cotensor(&r, &r).is_err());
    }
}
