use std::sync::Arc;

use super::corings::CoringsMorphism;
use crate::bimod::PresentedTensor;
use crate::constr::{tensor_extension_unchecked, unit_coring, RightExtension};
use crate::coring::{cotensor, fuse_left, fuse_right, Coring};
use crate::error::{Error, Result};
use crate::exactla::{Mat, Scalar};
use crate::verdict::Verdict;

/// A morphism `(C : A) -> (D : B)` of right extensions: a right `B`-action
/// `rho_C` on `C` and a right `D`-coaction `rho^C: C -> C (x)_B D`, the tensor
/// taken with respect to `rho_C`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtMorphism {
    ext: RightExtension,
}

impl ExtMorphism {
    /// Assembles the data without validating it; see [`ExtMorphism::check`].
    pub fn new(source: Arc<Coring>, target: Arc<Coring>, right_b_action: Vec<Mat>, coact_lift: Mat) -> Result<Self> {
        RightExtension::from_parts(source, target, right_b_action, coact_lift).map(ExtMorphism::from)
    }

    /// `c -> c_(1) (x) phi(c_(2))` for a linear map `phi: C -> D` of corings over one base.
    pub fn from_coalgebra_map(source: Arc<Coring>, target: Arc<Coring>, phi: &Mat) -> Result<Self> {
        if source.base() != target.base() {
            return Err(Error::AlgebraMismatch("expected corings over one base algebra".into()));
        }
        let (n, nd) = (source.dim(), target.dim());
        if phi.rows() != n || phi.cols() != nd {
            return Err(Error::DimensionMismatch {
                expected: n * nd,
                found: phi.rows() * phi.cols(),
            });
        }
        let lift = sweedler_push(&source, nd, phi);
        let acts = source.carrier().right_acts().to_vec();
        ExtMorphism::new(source, target, acts, lift)
    }

    /// An isomorphism `(phi, alpha)` of corings as an extension morphism: `C`
    /// acts on the right through `alpha^-1` and `rho(c) = c_(1) (x) phi(c_(2))`.
    pub fn from_coring_iso(iso: &CoringsMorphism) -> Result<Self> {
        let (source, target) = (iso.source(), iso.target());
        let alpha_inv = iso
            .varphi()
            .inverse()
            .ok_or_else(|| Error::IsoFailure("the algebra map is not invertible".into()))?;
        let field = source.field();
        let carrier = source.carrier();
        let acts = (0..target.base().dim())
            .map(|b| {
                let a = alpha_inv.map().row(b);
                let mut act = Mat::zeros(field, source.dim(), source.dim());
                for (x, r) in a.iter().zip(carrier.right_acts()) {
                    if !x.is_zero() {
                        act = act.add(&r.scale(x));
                    }
                }
                act
            })
            .collect();
        let lift = sweedler_push(source, target.dim(), iso.phi());
        ExtMorphism::new(source.clone(), target.clone(), acts, lift)
    }

    pub fn extension(&self) -> &RightExtension {
        &self.ext
    }

    pub fn source(&self) -> &Arc<Coring> {
        self.ext.c()
    }

    pub fn target(&self) -> &Arc<Coring> {
        self.ext.d()
    }

    pub fn right_acts(&self) -> &[Mat] {
        self.ext.right_acts()
    }

    /// `rho_C: C (x)_k B -> C`, rows indexed by `(c, b)` in row-major order.
    pub fn rho_action(&self) -> Mat {
        let (n, acts) = (self.source().dim(), self.right_acts());
        let rows = (0..n * acts.len())
            .map(|k| acts[k % acts.len()].row(k / acts.len()).to_vec())
            .collect();
        Mat::from_rows(self.source().field(), n, rows).expect("action rows have the carrier width")
    }

    pub fn coact_lift(&self) -> &Mat {
        self.ext.coact_lift()
    }

    /// `rho^C` in the coordinates of `C (x)_B D`.
    pub fn coact(&self) -> &Mat {
        self.ext.coact()
    }

    pub fn check(&self) -> Verdict {
        self.ext.check()
    }
}

/// `c -> c_(1) (x) phi(c_(2))` as a lift into `C (x)_k D`.
fn sweedler_push(c: &Coring, nd: usize, phi: &Mat) -> Mat {
    let n = c.dim();
    let mut lift = Mat::zeros(c.field(), n, n * nd);
    for i in 0..n {
        let row = lift.row_mut(i);
        for (j, k, x) in c.sweedler(i) {
            for (u, y) in phi.row(k).iter().enumerate() {
                row[j * nd + u].add_mul(&x, y);
            }
        }
    }
    lift
}

impl From<RightExtension> for ExtMorphism {
    fn from(ext: RightExtension) -> Self {
        ExtMorphism { ext }
    }
}

pub fn check_ext_morphism(m: &ExtMorphism) -> Verdict {
    m.check()
}

/// `(C : A) -> (C : A)`: the right `A`-action of the carrier and `rho = Delta`.
pub fn ext_identity(c: Arc<Coring>) -> ExtMorphism {
    let acts = c.carrier().right_acts().to_vec();
    let lift = c.comul_lift().clone();
    ExtMorphism::new(c.clone(), c, acts, lift).expect("the comultiplication has the shape of a coaction")
}

/// `(C : A) -> k`: scalar action, `rho` the identity through `C (x)_k k = C`.
pub fn ext_to_unit(c: Arc<Coring>) -> ExtMorphism {
    let f = c.field();
    let id = Mat::identity(f, c.dim());
    ExtMorphism::new(c, Arc::new(unit_coring(f)), vec![id.clone()], id).expect("identity has the shape of a coaction")
}

/// `(C : A) -> (A : A)`: `rho(c) = c (x) 1`.
pub fn ext_counit(c: Arc<Coring>) -> ExtMorphism {
    let a = c.base().clone();
    let d = Arc::new(Coring::trivial(a.clone()));
    let acts = c.carrier().right_acts().to_vec();
    let rows = (0..c.dim())
        .map(|i| crate::exactla::kron_vec(&c.carrier().basis_vector(i), a.unit()))
        .collect();
    let lift = Mat::from_rows(c.field(), c.dim() * a.dim(), rows).expect("rows have the ambient width");
    ExtMorphism::new(c, d, acts, lift).expect("unit coaction is well shaped")
}

/// `k -> D` picking the basis element `g`, `rho(1) = 1 (x) g`. Valid when `g` is grouplike.
pub fn ext_grouplike(d: Arc<Coring>, g: usize) -> Result<ExtMorphism> {
    let f = d.field();
    if g >= d.dim() {
        return Err(Error::DimensionMismatch {
            expected: d.dim(),
            found: g,
        });
    }
    let mut lift = Mat::zeros(f, 1, d.dim());
    lift.set(0, g, f.one());
    ExtMorphism::new(Arc::new(unit_coring(f)), d, vec![Mat::identity(f, 1)], lift)
}

fn composable(g: &ExtMorphism, f: &ExtMorphism) -> Result<()> {
    if f.target() != g.source() {
        return Err(Error::ObjectMismatch("extension morphisms are not composable".into()));
    }
    Ok(())
}

/// `g . f` by the explicit formulas
/// `e . b = e_(0) epsilon(e_(1) b)` and `rho(e) = e_(0) epsilon(e_(1)^[0]) (x) e_(1)^[1]`.
pub fn ext_compose(g: &ExtMorphism, f: &ExtMorphism) -> Result<ExtMorphism> {
    composable(g, f)?;
    let (e, c, d) = (f.source(), g.source(), g.target());
    let field = e.field();
    let (ne, nc, nd) = (e.dim(), c.dim(), d.dim());
    let e_a = f.ext.c_ab();
    let eps_of_action: Vec<Mat> = g.right_acts().iter().map(|r| r.mul(c.counit())).collect();
    let mut acts = vec![Mat::zeros(field, ne, ne); eps_of_action.len()];
    let mut lift = Mat::zeros(field, ne, ne * nd);
    for p in 0..ne {
        for (idx, x) in f.coact_lift().row(p).iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (q, r) = (idx / nc, idx % nc);
            let eq = e.carrier().basis_vector(q);
            for (act, eps) in acts.iter_mut().zip(&eps_of_action) {
                let v = e_a.act_right(&eq, eps.row(r));
                for (o, y) in act.row_mut(p).iter_mut().zip(&v) {
                    o.add_mul(x, y);
                }
            }
            for (jdx, y) in g.coact_lift().row(r).iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let (s, u) = (jdx / nd, jdx % nd);
                let xy = x * y;
                let v = e_a.act_right(&eq, c.counit().row(s));
                let row = lift.row_mut(p);
                for (w, z) in v.iter().enumerate() {
                    if !z.is_zero() {
                        row[w * nd + u].add_mul(&xy, z);
                    }
                }
            }
        }
    }
    ExtMorphism::new(e.clone(), d.clone(), acts, lift)
}

/// `g . f` through `E = E []_C C -> E []_C (C (x)_B D) = E (x)_B D`. The right
/// `B`-action on `E` is transported along `rho^E` from `E (x)_A C`, and the
/// final identification solves against the injective `rho^E (x)_B D`.
pub fn ext_compose_via_cotensor(g: &ExtMorphism, f: &ExtMorphism) -> Result<ExtMorphism> {
    composable(g, f)?;
    let (e, c, d) = (f.source(), g.source(), g.target());
    let field = e.field();
    let (ne, nd) = (e.dim(), d.dim());

    let k1 = cotensor(f.ext.right_comodule(), &c.regular_left_comodule())?;
    let rho = f.coact();
    let onto = rho.rank() == ne && k1.dim() == ne && (0..ne).all(|p| k1.contains(rho.row(p)));
    if !onto {
        return Err(Error::IsoFailure(
            "the coaction is not a bijection onto E []_C C".into(),
        ));
    }

    let tens = f.ext.tens();
    let id_e = Mat::identity(field, ne);
    let mut acts = Vec::with_capacity(g.right_acts().len());
    for r in g.right_acts() {
        let on_tensor = tens.induced(&id_e, r, tens)?;
        let act = rho
            .solve_left(&rho.mul(&on_tensor))
            .ok_or_else(|| Error::IsoFailure("the action does not transport along the coaction".into()))?;
        acts.push(act);
    }

    let inner = PresentedTensor::new(f.ext.c_ab().clone(), g.ext.c_ab().clone())?;
    let triple = PresentedTensor::new(inner.result().clone(), d.carrier().clone())?;
    let pushed_rows = (0..ne)
        .map(|p| fuse_right(&triple, &inner, f.coact_lift().row(p), g.coact_lift()))
        .collect();
    let pushed = Mat::from_rows(field, triple.dim(), pushed_rows)?;

    let e_b = Arc::new(e.carrier().with_right_action(d.base().clone(), acts.clone())?);
    let out = PresentedTensor::new(e_b, d.carrier().clone())?;
    let rho_inner = inner.project_rows(f.coact_lift());
    let psi_rows = (0..out.dim())
        .map(|k| {
            let (p, u) = out.rep(k);
            let mut unit = vec![field.zero(); out.ambient_dim()];
            unit[p * nd + u] = field.one();
            fuse_left(&triple, &unit, &rho_inner)
        })
        .collect::<Vec<Vec<Scalar>>>();
    let psi = Mat::from_rows(field, triple.dim(), psi_rows)?;
    if psi.rank() != out.dim() {
        return Err(Error::IsoFailure("rho^E (x) D is not injective".into()));
    }
    let coact = psi
        .solve_left(&pushed)
        .ok_or_else(|| Error::IsoFailure("pushed coaction leaves the image of rho^E (x) D".into()))?;
    let lift = out.quotient().lift_rows(&coact);
    ExtMorphism::new(e.clone(), d.clone(), acts, lift)
}

/// `m (x) m2` between tensor corings: action `(cb) (x) (c'b')` and the
/// reshuffled tensor of the coactions.
pub fn ext_tensor_morphisms(m: &ExtMorphism, m2: &ExtMorphism) -> Result<ExtMorphism> {
    tensor_extension_unchecked(&m.ext, &m2.ext).map(ExtMorphism::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::Algebra;
    use crate::constr::fixtures::{cyclic2_table, grouplike_coalgebra, klein_table, matrix_coalgebra};
    use crate::exactla::Field;

    fn corings(f: Field) -> (Arc<Coring>, Arc<Coring>, Arc<Coring>) {
        let m = Arc::new(matrix_coalgebra(f, 2));
        let g = Arc::new(grouplike_coalgebra(f, &cyclic2_table(), &["e", "g"]).unwrap());
        let t = Arc::new(Coring::trivial(Arc::new(Algebra::dual_numbers(f))));
        (m, g, t)
    }

    #[test]
    fn standard_morphisms_pass() {
        let f = Field::Prime(5);
        let (m, g, t) = corings(f);
        for c in [&m, &g, &t] {
            assert_eq!(ext_identity(c.clone()).check(), Ok(()));
            assert_eq!(ext_to_unit(c.clone()).check(), Ok(()));
            assert_eq!(ext_counit(c.clone()).check(), Ok(()));
        }
        assert_eq!(ext_grouplike(g, 1).unwrap().check(), Ok(()));
    }

    #[test]
    fn zero_coaction_fails_counit() {
        let f = Field::Prime(5);
        let (m, _, _) = corings(f);
        let bad = ExtMorphism::new(m.clone(), m, vec![Mat::identity(f, 4)], Mat::zeros(f, 4, 16)).unwrap();
        assert_eq!(bad.check().unwrap_err().law, "counit");
    }

    #[test]
    fn identity_laws() {
        let f = Field::Rationals;
        let (m, g, t) = corings(f);
        for c in [m, g, t] {
            let h = ext_to_unit(c.clone());
            let id = ext_identity(c);
            assert_eq!(ext_compose(&h, &id).unwrap(), h);
            let id_k = ext_identity(h.target().clone());
            assert_eq!(ext_compose(&id_k, &h).unwrap(), h);
        }
    }

    #[test]
    fn both_routes_agree() {
        let f = Field::Prime(5);
        let (m, g, _) = corings(f);
        let k4 = Arc::new(grouplike_coalgebra(f, &klein_table(), &["e", "a", "b", "ab"]).unwrap());
        let incl =
            ExtMorphism::from_coalgebra_map(g.clone(), k4, &Mat::from_i64(f, &[&[1, 0, 0, 0], &[0, 1, 0, 0]])).unwrap();
        let pairs = [
            (ext_to_unit(m.clone()), ext_identity(m.clone())),
            (ext_grouplike(g.clone(), 1).unwrap(), ext_to_unit(m)),
            (incl, ext_grouplike(g, 1).unwrap()),
        ];
        for (second, first) in &pairs {
            let a = ext_compose(second, first).unwrap();
            let b = ext_compose_via_cotensor(second, first).unwrap();
            assert_eq!(a, b);
            assert_eq!(a.check(), Ok(()));
        }
    }

    #[test]
    fn rho_action_rows() {
        let f = Field::Rationals;
        let (_, _, t) = corings(f);
        let id = ext_identity(t);
        let rho = id.rho_action();
        assert_eq!(rho.rows(), 4);
        // 1 . x = x
        assert_eq!(rho.row(1), &[f.zero(), f.one()]);
    }

    #[test]
    fn not_composable() {
        let f = Field::Rationals;
        let (m, g, _) = corings(f);
        assert!(ext_compose(&ext_identity(m), &ext_identity(g)).is_err());
    }
}
