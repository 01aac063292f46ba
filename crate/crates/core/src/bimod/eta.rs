use std::sync::Arc;

use rand::Rng;

use super::tensor::{tensor_over_k, PresentedTensor};
use super::{check_linear, hom_space, Bimodule, BimoduleMorphism};
use crate::error::{Error, Result};
use crate::exactla::{Mat, Scalar};
use crate::verdict::{Verdict, Violation};

/// `(M (x)_A C) (x)_k (N (x)_A' C') -> (M (x)_k N) (x)_{A (x) A'} (C (x)_k C')`,
/// `m (x) c (x) n (x) c' -> (m (x) n) (x) (c (x) c')`.
#[derive(Clone, Debug)]
pub struct Eta {
    source: Arc<Bimodule>,
    target: PresentedTensor,
    map: Mat,
    inverse: Mat,
}

impl Eta {
    pub fn source(&self) -> &Arc<Bimodule> {
        &self.source
    }

    pub fn target(&self) -> &PresentedTensor {
        &self.target
    }

    pub fn map(&self) -> &Mat {
        &self.map
    }

    pub fn inverse(&self) -> &Mat {
        &self.inverse
    }

    pub fn as_morphism(&self) -> Result<BimoduleMorphism> {
        BimoduleMorphism::new(self.source.clone(), self.target.result().clone(), self.map.clone())
    }
}

/// Builds the reshuffle map, checks it descends from both presentations and is invertible.
pub fn eta_map(mc: &PresentedTensor, nc: &PresentedTensor) -> Result<Eta> {
    let field = mc.field();
    if nc.field() != field {
        return Err(Error::FieldMismatch);
    }
    let (m, c) = (mc.left(), mc.right());
    let (n, c2) = (nc.left(), nc.right());
    let mn = Arc::new(tensor_over_k(m, n)?);
    let cc = Arc::new(tensor_over_k(c, c2)?);
    let target = PresentedTensor::new(mn, cc)?;
    let source = Arc::new(tensor_over_k(mc.result(), nc.result())?);

    let (dn, dc, dc2) = (n.dim(), c.dim(), c2.dim());
    let shuffle = |left_idx: usize, right_idx: usize| -> usize {
        let (i, ci) = (left_idx / dc, left_idx % dc);
        let (j, cj) = (right_idx / dc2, right_idx % dc2);
        (i * dn + j) * (dc * dc2) + ci * dc2 + cj
    };

    let one = field.one();
    for r in mc.relations().sparse_rows() {
        for y in 0..nc.ambient_dim() {
            let class = target
                .quotient()
                .project_entries(r.entries().iter().map(|(x, v)| (shuffle(*x, y), v)));
            if !class.iter().all(Scalar::is_zero) {
                return Err(Error::DescentFailure(
                    "left relations are not preserved by the reshuffle".into(),
                ));
            }
        }
    }
    for r in nc.relations().sparse_rows() {
        for x in 0..mc.ambient_dim() {
            let class = target
                .quotient()
                .project_entries(r.entries().iter().map(|(y, v)| (shuffle(x, *y), v)));
            if !class.iter().all(Scalar::is_zero) {
                return Err(Error::DescentFailure(
                    "right relations are not preserved by the reshuffle".into(),
                ));
            }
        }
    }

    let mut rows = Vec::with_capacity(mc.dim() * nc.dim());
    for p in 0..mc.dim() {
        let (i, ci) = mc.rep(p);
        for q in 0..nc.dim() {
            let (j, cj) = nc.rep(q);
            let idx = shuffle(i * dc + ci, j * dc2 + cj);
            rows.push(target.quotient().project_entries([(idx, &one)]));
        }
    }
    let map = Mat::from_rows(field, target.dim(), rows)?;
    let inverse = map.inverse().ok_or_else(|| {
        Error::IsoFailure(format!(
            "reshuffle map of shape {}x{} is not invertible",
            map.rows(),
            map.cols()
        ))
    })?;
    Ok(Eta {
        source,
        target,
        map,
        inverse,
    })
}

/// The two `eta`s of a naturality square for fixed `M -> M2`, `N -> N2`, `C`, `C'`.
pub struct NaturalitySquare {
    m: Arc<Bimodule>,
    m2: Arc<Bimodule>,
    n: Arc<Bimodule>,
    n2: Arc<Bimodule>,
    mc: PresentedTensor,
    m2c: PresentedTensor,
    nc: PresentedTensor,
    n2c: PresentedTensor,
    eta1: Eta,
    eta2: Eta,
}

impl NaturalitySquare {
    pub fn new(
        m: Arc<Bimodule>,
        m2: Arc<Bimodule>,
        n: Arc<Bimodule>,
        n2: Arc<Bimodule>,
        c: Arc<Bimodule>,
        c2: Arc<Bimodule>,
    ) -> Result<Self> {
        let mc = PresentedTensor::new(m.clone(), c.clone())?;
        let m2c = PresentedTensor::new(m2.clone(), c.clone())?;
        let nc = PresentedTensor::new(n.clone(), c2.clone())?;
        let n2c = PresentedTensor::new(n2.clone(), c2)?;
        let eta1 = eta_map(&mc, &nc)?;
        let eta2 = eta_map(&m2c, &n2c)?;
        Ok(NaturalitySquare {
            m,
            m2,
            n,
            n2,
            mc,
            m2c,
            nc,
            n2c,
            eta1,
            eta2,
        })
    }

    pub fn eta_source(&self) -> &Eta {
        &self.eta1
    }

    pub fn eta_target(&self) -> &Eta {
        &self.eta2
    }

    /// `eta2 . ((f (x) C) (x) (g (x) C')) = ((f (x) g) (x) (C (x) C')) . eta1`,
    /// and the same square for the inverses. Non-linear `f` or `g` is an error.
    pub fn check(&self, f: &Mat, g: &Mat) -> Result<Verdict> {
        check_linear(&self.m, &self.m2, f).map_err(Error::NotLinear)?;
        check_linear(&self.n, &self.n2, g).map_err(Error::NotLinear)?;
        let field = f.field();
        let id_c = Mat::identity(field, self.mc.right().dim());
        let id_c2 = Mat::identity(field, self.nc.right().dim());
        let fc = self.mc.induced(f, &id_c, &self.m2c)?;
        let gc = self.nc.induced(g, &id_c2, &self.n2c)?;
        let top = fc.kron(&gc);
        let id_cc = Mat::identity(field, self.eta1.target.right().dim());
        let bottom = self.eta1.target.induced(&f.kron(g), &id_cc, &self.eta2.target)?;

        let lhs = top.mul(&self.eta2.map);
        let rhs = self.eta1.map.mul(&bottom);
        if let Some(r) = lhs.first_differing_row(&rhs) {
            let labels = self.eta1.source.labels();
            let tl = self.eta2.target.result();
            return Ok(Err(Violation::new("naturality", labels[r].clone())
                .with_sides(tl.format(rhs.row(r)), tl.format(lhs.row(r)))));
        }
        let lhs = self.eta1.inverse.mul(&top);
        let rhs = bottom.mul(&self.eta2.inverse);
        if let Some(r) = lhs.first_differing_row(&rhs) {
            let labels = self.eta1.target.result().labels();
            let sl = &self.eta2.source;
            return Ok(Err(Violation::new("inverse-naturality", labels[r].clone())
                .with_sides(sl.format(rhs.row(r)), sl.format(lhs.row(r)))));
        }
        Ok(Ok(()))
    }
}

/// Naturality of `eta` in `(M, N)` for the maps `f: M -> M2`, `g: N -> N2`.
pub fn check_eta_naturality(
    f: &BimoduleMorphism,
    g: &BimoduleMorphism,
    c: Arc<Bimodule>,
    c2: Arc<Bimodule>,
) -> Result<Verdict> {
    let square = NaturalitySquare::new(
        f.source().clone(),
        f.target().clone(),
        g.source().clone(),
        g.target().clone(),
        c,
        c2,
    )?;
    square.check(f.map(), g.map())
}

/// A random bimodule map `m -> n`: a combination of a basis of the hom space
/// with coefficients in `-3..=3`.
pub fn random_hom(m: &Bimodule, n: &Bimodule, rng: &mut impl Rng) -> Mat {
    let field = m.field();
    let mut out = Mat::zeros(field, m.dim(), n.dim());
    for h in hom_space(m, n) {
        let c = field.from_i64(rng.random_range(-3..=3));
        out = out.add(&h.scale(&c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algcore::Algebra;
    use crate::exactla::Field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn eta_on_dual_numbers_is_bijective() {
        let f = Field::Rationals;
        let a = Arc::new(Bimodule::regular(Arc::new(Algebra::dual_numbers(f))));
        let ac = PresentedTensor::new(a.clone(), a.clone()).unwrap();
        let eta = eta_map(&ac, &ac).unwrap();
        assert_eq!(eta.map().rows(), 4);
        assert_eq!(eta.map().cols(), 4);
        assert_eq!(eta.as_morphism().unwrap().check(), Ok(()));
    }

    #[test]
    fn eta_of_ground_factors_is_identity() {
        let f = Field::Prime(5);
        let k = Arc::new(Bimodule::regular(Arc::new(Algebra::ground(f))));
        let kk = PresentedTensor::new(k.clone(), k.clone()).unwrap();
        let eta = eta_map(&kk, &kk).unwrap();
        assert_eq!(*eta.map(), Mat::identity(f, 1));
    }

    #[test]
    fn eta_sends_unit_tensors_to_unit_tensors() {
        let f = Field::Rationals;
        let alg = Arc::new(Algebra::upper_triangular(f));
        let a = Arc::new(Bimodule::regular(alg.clone()));
        let ac = PresentedTensor::new(a.clone(), a.clone()).unwrap();
        let eta = eta_map(&ac, &ac).unwrap();
        // eta(1 (x) c (x) 1 (x) c') = (1 (x) 1) (x) (c (x) c')
        for c in 0..3 {
            for c2 in 0..3 {
                let x = ac.pure(alg.unit(), &a.basis_vector(c));
                let y = ac.pure(alg.unit(), &a.basis_vector(c2));
                let img = eta.map().apply(&crate::exactla::kron_vec(&x, &y));
                let unit2 = crate::exactla::kron_vec(alg.unit(), alg.unit());
                let cc = crate::exactla::kron_vec(&a.basis_vector(c), &a.basis_vector(c2));
                assert_eq!(img, eta.target().pure(&unit2, &cc));
            }
        }
    }

    #[test]
    fn random_squares_commute() {
        let f = Field::Prime(5);
        let alg = Arc::new(Algebra::dual_numbers(f));
        let a = Arc::new(Bimodule::regular(alg.clone()));
        let m = Arc::new(a.right_module());
        let square = NaturalitySquare::new(m.clone(), m.clone(), m.clone(), m.clone(), a.clone(), a).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let fm = random_hom(&m, &m, &mut rng);
            let gm = random_hom(&m, &m, &mut rng);
            assert_eq!(square.check(&fm, &gm).unwrap(), Ok(()));
        }
    }

    #[test]
    fn non_linear_map_rejected() {
        let f = Field::Rationals;
        let alg = Arc::new(Algebra::dual_numbers(f));
        let a = Arc::new(Bimodule::regular(alg));
        let m = Arc::new(a.right_module());
        let square = NaturalitySquare::new(m.clone(), m.clone(), m.clone(), m, a.clone(), a).unwrap();
        let swap = Mat::from_i64(f, &[&[0, 1], &[1, 0]]);
        let id = Mat::identity(f, 2);
        assert!(matches!(square.check(&swap, &id), Err(Error::NotLinear(_))));
    }
}
