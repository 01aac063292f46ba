use std::sync::Arc;

use super::fixtures::unit_coring;
use super::tensor::tensor_coring;
use crate::bimod::{check_linear, reshuffle_kron, Bimodule, PresentedTensor};
use crate::coring::{Bicomodule, Comodule, Coring, Side};
use crate::error::{Error, Result};
use crate::exactla::{kron_vec, Mat};
use crate::verdict::Verdict;

/// Conditions of a right extension, in the order they are validated.
pub const EXTENSION_CONDITIONS: [&str; 4] = ["bimodule", "delta-right-linear", "coaction", "colinearity"];

/// `D` (over `B`) as a right extension of `C` (over `A`): a right `B`-action on
/// `C` and a right `D`-coaction `rho: C -> C (x)_B D`, the tensor taken with
/// respect to that action.
#[derive(Clone, Debug)]
pub struct RightExtension {
    c: Arc<Coring>,
    d: Arc<Coring>,
    c_ab: Arc<Bimodule>,
    left: Comodule,
    right: Comodule,
}

impl PartialEq for RightExtension {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && self.d == other.d && self.c_ab == other.c_ab && self.right.coact() == other.right.coact()
    }
}

impl RightExtension {
    /// Assembles the data without validating it; see [`RightExtension::validate`].
    pub fn from_parts(c: Arc<Coring>, d: Arc<Coring>, right_b_action: Vec<Mat>, coact_lift: Mat) -> Result<Self> {
        if c.field() != d.field() {
            return Err(Error::FieldMismatch);
        }
        let b = d.base().clone();
        if right_b_action.len() != b.dim() {
            return Err(Error::DimensionMismatch {
                expected: b.dim(),
                found: right_b_action.len(),
            });
        }
        for m in &right_b_action {
            if m.rows() != c.dim() || m.cols() != c.dim() {
                return Err(Error::DimensionMismatch {
                    expected: c.dim(),
                    found: m.rows().max(m.cols()),
                });
            }
        }
        let c_ab = Arc::new(c.carrier().with_right_action(b, right_b_action)?);
        let left = Comodule::new(c.clone(), Side::Left, c_ab.clone(), c.comul_lift().clone())?;
        let right = Comodule::new(d.clone(), Side::Right, c_ab.clone(), coact_lift)?;
        Ok(RightExtension {
            c,
            d,
            c_ab,
            left,
            right,
        })
    }

    /// Turns the first failing condition into the matching error.
    pub fn validate(&self) -> Result<()> {
        self.check_bimodule().map_err(Error::NotABimodule)?;
        self.check_delta_right_linear().map_err(Error::DeltaNotRightLinear)?;
        self.check_coaction().map_err(Error::NotACoaction)?;
        self.check_colinearity().map_err(Error::NotColinear)
    }

    pub fn check(&self) -> Verdict {
        self.check_bimodule()?;
        self.check_delta_right_linear()?;
        self.check_coaction()?;
        self.check_colinearity()
    }

    /// Outcomes per condition of [`EXTENSION_CONDITIONS`]; `None` once an earlier one failed.
    pub fn check_conditions(&self) -> Vec<(&'static str, Option<Verdict>)> {
        let steps: [fn(&RightExtension) -> Verdict; 4] = [
            RightExtension::check_bimodule,
            RightExtension::check_delta_right_linear,
            RightExtension::check_coaction,
            RightExtension::check_colinearity,
        ];
        let mut failed = false;
        EXTENSION_CONDITIONS
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

    pub fn check_bimodule(&self) -> Verdict {
        self.c_ab.check()
    }

    /// `Delta: C -> C (x)_A C` is right `B`-linear, `B` acting on the right factor.
    /// `Delta: C -> C (x)_A C` is right `B`-linear, `C` carrying the given action.
    pub fn check_delta_right_linear(&self) -> Verdict {
        let l = &self.left;
        check_linear(l.carrier(), l.tens().result(), l.coact()).map_err(|v| v.within("delta-right-linear", "Delta"))
    }

    pub fn check_coaction(&self) -> Verdict {
        self.right.check()
    }

    pub fn check_colinearity(&self) -> Verdict {
        Bicomodule::new(self.left.clone(), self.right.clone())?.check_commute()
    }

    pub fn c(&self) -> &Arc<Coring> {
        &self.c
    }

    pub fn d(&self) -> &Arc<Coring> {
        &self.d
    }

    /// The carrier of `C` as an `(A, B)`-bimodule.
    pub fn c_ab(&self) -> &Arc<Bimodule> {
        &self.c_ab
    }

    pub fn right_acts(&self) -> &[Mat] {
        self.c_ab.right_acts()
    }

    pub fn coact_lift(&self) -> &Mat {
        self.right.coact_lift()
    }

    /// `rho` in the coordinates of [`RightExtension::tens`].
    pub fn coact(&self) -> &Mat {
        self.right.coact()
    }

    /// The presented `C (x)_B D`.
    pub fn tens(&self) -> &PresentedTensor {
        self.right.tens()
    }

    pub fn right_comodule(&self) -> &Comodule {
        &self.right
    }

    pub fn left_comodule(&self) -> &Comodule {
        &self.left
    }
}

/// [`RightExtension::from_parts`] followed by [`RightExtension::validate`].
pub fn make_right_extension(
    c: Arc<Coring>,
    d: Arc<Coring>,
    right_b_action: Vec<Mat>,
    coact_lift: Mat,
) -> Result<RightExtension> {
    let e = RightExtension::from_parts(c, d, right_b_action, coact_lift)?;
    e.validate()?;
    Ok(e)
}

/// `C` over itself with `rho = Delta`.
pub fn regular_extension(c: Arc<Coring>) -> Result<RightExtension> {
    let acts = c.carrier().right_acts().to_vec();
    let lift = c.comul_lift().clone();
    make_right_extension(c.clone(), c, acts, lift)
}

/// `(A : A)` as a right extension of an `A`-coring, `rho(c) = c (x) 1`.
pub fn trivial_extension(c: Arc<Coring>) -> Result<RightExtension> {
    let a = c.base().clone();
    let d = Arc::new(Coring::trivial(a.clone()));
    let acts = c.carrier().right_acts().to_vec();
    let rows = (0..c.dim())
        .map(|i| kron_vec(&c.carrier().basis_vector(i), a.unit()))
        .collect();
    let lift = Mat::from_rows(c.field(), c.dim() * a.dim(), rows)?;
    make_right_extension(c, d, acts, lift)
}

/// The unit coring as a right extension of any coring: scalar right action,
/// `rho` the identity through `C (x)_k k = C`.
pub fn unit_extension(c: Arc<Coring>) -> Result<RightExtension> {
    let f = c.field();
    let id = Mat::identity(f, c.dim());
    make_right_extension(c, Arc::new(unit_coring(f)), vec![id.clone()], id)
}

/// `D (x)_k D'` as a right extension of `C (x)_k C'`, with action
/// `(cb) (x) (c'b')` and coaction `(c_(0) (x) c'_(0)) (x) (c_(1) (x) c'_(1))`.
/// The result is validated.
pub fn tensor_extension(e: &RightExtension, e2: &RightExtension) -> Result<RightExtension> {
    let t = tensor_extension_unchecked(e, e2)?;
    t.validate()?;
    Ok(t)
}

/// [`tensor_extension`] without the final validation.
pub fn tensor_extension_unchecked(e: &RightExtension, e2: &RightExtension) -> Result<RightExtension> {
    if e.c.field() != e2.c.field() {
        return Err(Error::FieldMismatch);
    }
    let c = Arc::new(tensor_coring(&e.c, &e2.c)?);
    let d = Arc::new(tensor_coring(&e.d, &e2.d)?);
    let mut acts = Vec::with_capacity(e.right_acts().len() * e2.right_acts().len());
    for r in e.right_acts() {
        for r2 in e2.right_acts() {
            acts.push(r.kron(r2));
        }
    }
    let lift = reshuffle_kron(
        e.coact_lift(),
        e2.coact_lift(),
        (e.c.dim(), e.d.dim()),
        (e2.c.dim(), e2.d.dim()),
    );
    RightExtension::from_parts(c, d, acts, lift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::Algebra;
    use crate::constr::fixtures::{cyclic2_table, grouplike_coalgebra, matrix_coalgebra};
    use crate::exactla::Field;

    #[test]
    fn standard_extensions_validate() {
        let f = Field::Rationals;
        let cs = [
            Arc::new(matrix_coalgebra(f, 2)),
            Arc::new(Coring::trivial(Arc::new(Algebra::dual_numbers(f)))),
            Arc::new(unit_coring(f)),
        ];
        for c in cs {
            regular_extension(c.clone()).unwrap();
            trivial_extension(c.clone()).unwrap();
            unit_extension(c).unwrap();
        }
    }

    #[test]
    fn zero_coaction_is_not_a_coaction() {
        let f = Field::Prime(5);
        let c = Arc::new(matrix_coalgebra(f, 2));
        let id = Mat::identity(f, 4);
        let err = make_right_extension(c.clone(), c, vec![id], Mat::zeros(f, 4, 16)).unwrap_err();
        match err {
            Error::NotACoaction(v) => assert_eq!(v.law, "counit"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn transpose_action_breaks_delta_linearity() {
        let f = Field::Prime(5);
        let c = Arc::new(matrix_coalgebra(f, 2));
        let kc2 = Algebra::group_algebra(f, &cyclic2_table(), &["e", "g"]).unwrap();
        let d = Arc::new(Coring::trivial(Arc::new(kc2)));
        // g acts by e_ij -> e_ji; a module action, but Delta does not commute with it
        let mut t = Mat::zeros(f, 4, 4);
        for (a, b) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            t.set(a, b, f.one());
        }
        let lift = Mat::zeros(f, 4, 8);
        let e = RightExtension::from_parts(c, d, vec![Mat::identity(f, 4), t], lift).unwrap();
        assert_eq!(e.check_bimodule(), Ok(()));
        assert!(matches!(e.validate(), Err(Error::DeltaNotRightLinear(_))));
        let outcomes = e.check_conditions();
        assert!(outcomes[1].1.as_ref().unwrap().is_err());
        assert!(outcomes[2].1.is_none());
    }

    #[test]
    fn tensor_of_regular_is_regular_of_tensor() {
        let f = Field::Prime(5);
        let c = Arc::new(matrix_coalgebra(f, 2));
        let g = Arc::new(grouplike_coalgebra(f, &cyclic2_table(), &["e", "g"]).unwrap());
        let t = tensor_extension(
            &regular_extension(c.clone()).unwrap(),
            &regular_extension(g.clone()).unwrap(),
        )
        .unwrap();
        let cg = Arc::new(tensor_coring(&c, &g).unwrap());
        assert_eq!(t, regular_extension(cg).unwrap());
    }

    #[test]
    fn tensor_of_unit_extensions() {
        let f = Field::Rationals;
        let c = Arc::new(matrix_coalgebra(f, 2));
        let u = unit_extension(c.clone()).unwrap();
        let t = tensor_extension(&u, &u).unwrap();
        assert_eq!(t.d().dim(), 1);
        assert_eq!(*t.coact_lift(), Mat::identity(f, 16));
    }
}
