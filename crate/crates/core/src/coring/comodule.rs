use std::sync::Arc;

use super::{fuse_left, fuse_right, left_counit_on, right_counit_on, Coring};
use crate::bimod::{check_left_linear, check_linear, kron_apply, Bimodule, PresentedTensor};
use crate::error::{Error, Result};
use crate::exactla::Mat;
use crate::verdict::{Verdict, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Axioms of a comodule, in the order they are checked.
pub const COMODULE_AXIOMS: [&str; 3] = ["linearity", "coassociativity", "counit"];

/// A one-sided comodule over a coring. A right coaction lands in `M (x)_A C`,
/// a left one in `C (x)_A M`; the carrier may carry a second action on the
/// other side, which the coaction must then respect as well.
#[derive(Clone, Debug)]
pub struct Comodule {
    coring: Arc<Coring>,
    side: Side,
    carrier: Arc<Bimodule>,
    coact_lift: Mat,
    tens: PresentedTensor,
    coact: Mat,
}

impl Comodule {
    pub fn new(coring: Arc<Coring>, side: Side, carrier: Arc<Bimodule>, coact_lift: Mat) -> Result<Comodule> {
        let base = coring.base();
        let acting = match side {
            Side::Right => carrier.right_alg(),
            Side::Left => carrier.left_alg(),
        };
        if acting != base {
            return Err(Error::AlgebraMismatch(
                "comodule carrier is not a module over the base algebra".into(),
            ));
        }
        let width = carrier.dim() * coring.dim();
        if coact_lift.rows() != carrier.dim() {
            return Err(Error::DimensionMismatch {
                expected: carrier.dim(),
                found: coact_lift.rows(),
            });
        }
        if coact_lift.cols() != width {
            return Err(Error::DimensionMismatch {
                expected: width,
                found: coact_lift.cols(),
            });
        }
        let tens = match side {
            Side::Right => PresentedTensor::new(carrier.clone(), coring.carrier().clone())?,
            Side::Left => PresentedTensor::new(coring.carrier().clone(), carrier.clone())?,
        };
        let coact = tens.project_rows(&coact_lift);
        Ok(Comodule {
            coring,
            side,
            carrier,
            coact_lift,
            tens,
            coact,
        })
    }

    /// The induced left comodule `C (x)_B N` with coaction `Delta (x)_B N`.
    /// `c_ab` is the coring carrier with some right `B`-action.
    pub fn cofree(coring: &Arc<Coring>, c_ab: Arc<Bimodule>, n: Arc<Bimodule>) -> Result<(PresentedTensor, Comodule)> {
        if c_ab.left_acts() != coring.carrier().left_acts() || c_ab.left_alg() != coring.base() {
            return Err(Error::ObjectMismatch(
                "carrier does not extend the coring's left action".into(),
            ));
        }
        let t = PresentedTensor::new(c_ab, n)?;
        let field = coring.field();
        let td = t.dim();
        let rows = (0..td)
            .map(|k| {
                let (i, j) = t.rep(k);
                let mut row = vec![field.zero(); coring.dim() * td];
                for (u, v, x) in coring.sweedler(i) {
                    for (q, y) in t.class(v, j).entries() {
                        row[u * td + q].add_mul(&x, y);
                    }
                }
                row
            })
            .collect();
        let lift = Mat::from_rows(field, coring.dim() * td, rows)?;
        let comodule = Comodule::new(coring.clone(), Side::Left, t.result().clone(), lift)?;
        Ok((t, comodule))
    }

    pub fn coring(&self) -> &Arc<Coring> {
        &self.coring
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn carrier(&self) -> &Arc<Bimodule> {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn coact_lift(&self) -> &Mat {
        &self.coact_lift
    }

    /// The coaction in the coordinates of [`Comodule::tens`].
    pub fn coact(&self) -> &Mat {
        &self.coact
    }

    pub fn tens(&self) -> &PresentedTensor {
        &self.tens
    }

    pub fn check(&self) -> Verdict {
        self.check_linearity()?;
        self.check_coassociativity()?;
        self.check_counit()
    }

    pub fn check_axioms(&self) -> Vec<(&'static str, Option<Verdict>)> {
        let steps: [fn(&Comodule) -> Verdict; 3] = [
            Comodule::check_linearity,
            Comodule::check_coassociativity,
            Comodule::check_counit,
        ];
        let mut failed = false;
        COMODULE_AXIOMS
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

    pub fn check_linearity(&self) -> Verdict {
        check_linear(&self.carrier, self.tens.result(), &self.coact).map_err(|v| v.within("linearity", "coaction"))
    }

    pub fn check_coassociativity(&self) -> Verdict {
        let c = &self.coring;
        let (triple, inner) = match self.side {
            Side::Right => (
                PresentedTensor::new(self.tens.result().clone(), c.carrier().clone())?,
                &self.tens,
            ),
            Side::Left => (
                PresentedTensor::new(c.tens().result().clone(), self.carrier.clone())?,
                c.tens(),
            ),
        };
        for m in 0..self.dim() {
            let row = self.coact_lift.row(m);
            // right: (rho (x) C) rho vs (M (x) Delta) rho
            // left:  (Delta (x) M) lambda vs (C (x) lambda) lambda
            let (lhs, rhs) = match self.side {
                Side::Right => (
                    fuse_left(&triple, row, &self.coact),
                    fuse_right(&triple, inner, row, c.comul_lift()),
                ),
                Side::Left => (
                    fuse_left(&triple, row, c.comul()),
                    fuse_right(&triple, inner, row, &self.coact_lift),
                ),
            };
            if lhs != rhs {
                let r = &triple;
                return Err(Violation::new("coassociativity", self.carrier.labels()[m].clone())
                    .with_sides(r.format(&rhs), r.format(&lhs)));
            }
        }
        Ok(())
    }

    pub fn check_counit(&self) -> Verdict {
        for m in 0..self.dim() {
            let row = self.coact_lift.row(m);
            let got = match self.side {
                Side::Right => right_counit_on(&self.carrier, &self.coring, row),
                Side::Left => left_counit_on(&self.coring, &self.carrier, row),
            };
            let want = self.carrier.basis_vector(m);
            if got != want {
                return Err(Violation::new("counit", self.carrier.labels()[m].clone())
                    .with_sides(self.carrier.format(&want), self.carrier.format(&got)));
            }
        }
        Ok(())
    }
}

/// `lambda_N f = (C (x) f) lambda_M` for a map `f: M -> N` of left comodules.
pub fn check_left_colinear(f: &Mat, m: &Comodule, n: &Comodule) -> Verdict {
    if m.side != Side::Left || n.side != Side::Left || m.coring != n.coring {
        return Err(Violation::new(
            "precondition",
            "both maps must be left coactions of one coring",
        ));
    }
    check_left_linear(&m.carrier, &n.carrier, f)?;
    let id_c = Mat::identity(f.field(), m.coring.dim());
    let lhs = f.mul(&n.coact);
    for x in 0..m.dim() {
        let rhs = n.tens.project(&kron_apply(&id_c, f, m.coact_lift.row(x)));
        if lhs.row(x) != rhs.as_slice() {
            let r = n.tens.result();
            return Err(Violation::new("colinearity", m.carrier.labels()[x].clone())
                .with_sides(r.format(&rhs), r.format(lhs.row(x))));
        }
    }
    Ok(())
}

/// A carrier with a left `C`-coaction and a right `D`-coaction.
#[derive(Clone, Debug)]
pub struct Bicomodule {
    left: Comodule,
    right: Comodule,
}

impl Bicomodule {
    pub fn new(left: Comodule, right: Comodule) -> Result<Bicomodule> {
        if left.side != Side::Left || right.side != Side::Right {
            return Err(Error::ObjectMismatch("expected a left and a right coaction".into()));
        }
        if left.carrier != right.carrier {
            return Err(Error::ObjectMismatch(
                "the two coactions act on different carriers".into(),
            ));
        }
        Ok(Bicomodule { left, right })
    }

    /// `C` as a `(C, C)`-bicomodule via `Delta` on both sides.
    pub fn regular(c: &Arc<Coring>) -> Bicomodule {
        Bicomodule {
            left: c.regular_left_comodule(),
            right: c.regular_right_comodule(),
        }
    }

    pub fn left(&self) -> &Comodule {
        &self.left
    }

    pub fn right(&self) -> &Comodule {
        &self.right
    }

    pub fn check(&self) -> Verdict {
        self.left.check()?;
        self.right.check()?;
        self.check_commute()
    }

    /// `(lambda (x) D) rho = (C (x) rho) lambda` in `(C (x)_A M) (x)_B D`;
    /// this is left `C`-colinearity of `rho`.
    pub fn check_commute(&self) -> Verdict {
        let inner = &self.left.tens;
        let triple = PresentedTensor::new(inner.result().clone(), self.right.coring.carrier().clone())?;
        for m in 0..self.left.dim() {
            let lhs = fuse_left(&triple, self.right.coact_lift.row(m), &self.left.coact);
            let rhs = fuse_right(&triple, inner, self.left.coact_lift.row(m), &self.right.coact_lift);
            if lhs != rhs {
                let r = &triple;
                return Err(Violation::new("colinearity", self.left.carrier.labels()[m].clone())
                    .with_sides(r.format(&rhs), r.format(&lhs)));
            }
        }
        Ok(())
    }
}
