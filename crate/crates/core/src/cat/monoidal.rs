use std::fmt::Debug;
use std::sync::Arc;

use super::corings::{corings_compose, corings_tensor_morphisms, CoringsMorphism};
use super::ext::{ext_compose, ext_identity, ext_tensor_morphisms, ExtMorphism};
use crate::algcore::AlgebraMorphism;
use crate::constr::{tensor_coring, unit_coring};
use crate::coring::Coring;
use crate::error::{Error, Result};
use crate::exactla::Mat;
use crate::verdict::{Verdict, Violation};

/// The four parts of a monoidal check, in the order they run.
pub const MONOIDAL_PARTS: [&str; 4] = ["identity-preservation", "interchange", "unit", "associator"];

/// A category whose objects are corings, with a tensor bifunctor on top of
/// [`tensor_coring`].
pub trait CoringCategory {
    type Mor: Clone + Debug + PartialEq;

    fn identity(c: &Arc<Coring>) -> Self::Mor;
    /// `g . f`.
    fn compose(g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn tensor(m: &Self::Mor, m2: &Self::Mor) -> Result<Self::Mor>;
    fn check(m: &Self::Mor) -> Verdict;
    /// The morphism of an isomorphism of corings.
    fn from_iso(iso: &CoringsMorphism) -> Result<Self::Mor>;
}

pub struct Ext;

pub struct Corings;

impl CoringCategory for Ext {
    type Mor = ExtMorphism;

    fn identity(c: &Arc<Coring>) -> ExtMorphism {
        ext_identity(c.clone())
    }

    fn compose(g: &ExtMorphism, f: &ExtMorphism) -> Result<ExtMorphism> {
        ext_compose(g, f)
    }

    fn tensor(m: &ExtMorphism, m2: &ExtMorphism) -> Result<ExtMorphism> {
        ext_tensor_morphisms(m, m2)
    }

    fn check(m: &ExtMorphism) -> Verdict {
        m.check()
    }

    fn from_iso(iso: &CoringsMorphism) -> Result<ExtMorphism> {
        ExtMorphism::from_coring_iso(iso)
    }
}

impl CoringCategory for Corings {
    type Mor = CoringsMorphism;

    fn identity(c: &Arc<Coring>) -> CoringsMorphism {
        CoringsMorphism::identity(c.clone())
    }

    fn compose(g: &CoringsMorphism, f: &CoringsMorphism) -> Result<CoringsMorphism> {
        corings_compose(g, f)
    }

    fn tensor(m: &CoringsMorphism, m2: &CoringsMorphism) -> Result<CoringsMorphism> {
        corings_tensor_morphisms(m, m2)
    }

    fn check(m: &CoringsMorphism) -> Verdict {
        m.check()
    }

    fn from_iso(iso: &CoringsMorphism) -> Result<CoringsMorphism> {
        Ok(iso.clone())
    }
}

/// Named corings and morphisms, plus the composable pairs to test interchange on.
#[derive(Clone, Debug)]
pub struct Family<M> {
    pub corings: Vec<(String, Arc<Coring>)>,
    pub morphisms: Vec<(String, M)>,
    /// Indices `(f, g)` into `morphisms` with `g . f` defined.
    pub pairs: Vec<(usize, usize)>,
    /// Largest carrier dimension of an iterated tensor the associator check builds.
    pub max_dim: usize,
}

/// Outcome of each of [`MONOIDAL_PARTS`].
pub fn monoidal_parts<C: CoringCategory>(family: &Family<C::Mor>) -> Vec<(&'static str, Verdict)> {
    vec![
        (MONOIDAL_PARTS[0], identity_preservation::<C>(family)),
        (MONOIDAL_PARTS[1], interchange::<C>(family)),
        (MONOIDAL_PARTS[2], unit_isos::<C>(family)),
        (MONOIDAL_PARTS[3], associators::<C>(family)),
    ]
}

pub fn verify_monoidal<C: CoringCategory>(family: &Family<C::Mor>) -> Verdict {
    monoidal_parts::<C>(family).into_iter().try_for_each(|(_, v)| v)
}

pub fn verify_ext_monoidal(family: &Family<ExtMorphism>) -> Verdict {
    verify_monoidal::<Ext>(family)
}

pub fn verify_corings_monoidal(family: &Family<CoringsMorphism>) -> Verdict {
    verify_monoidal::<Corings>(family)
}

fn construction<'a>(law: &'static str, witness: &'a str) -> impl Fn(Error) -> Violation + 'a {
    move |e| Violation::new(law, witness.to_string()).with_sides("a constructible morphism", e.to_string())
}

fn identity_preservation<C: CoringCategory>(family: &Family<C::Mor>) -> Verdict {
    const LAW: &str = "identity-preservation";
    for (n1, c1) in &family.corings {
        for (n2, c2) in &family.corings {
            let witness = format!("{n1} ⊗ {n2}");
            let t = C::tensor(&C::identity(c1), &C::identity(c2)).map_err(construction(LAW, &witness))?;
            let tc = Arc::new(tensor_coring(c1, c2).map_err(construction(LAW, &witness))?);
            if t != C::identity(&tc) {
                return Err(Violation::new(LAW, witness).with_sides("the identity", "another morphism"));
            }
        }
    }
    Ok(())
}

/// `(g . f) (x) (g' . f') = (g (x) g') . (f (x) f')`, with the right-hand side
/// also required to pass the morphism check.
fn interchange<C: CoringCategory>(family: &Family<C::Mor>) -> Verdict {
    const LAW: &str = "interchange";
    let name = |i: usize| &family.morphisms[i].0;
    let mor = |i: usize| &family.morphisms[i].1;
    for &(f, g) in &family.pairs {
        for &(f2, g2) in &family.pairs {
            let witness = format!("({}•{})⊗({}•{})", name(g), name(f), name(g2), name(f2));
            let err = construction(LAW, &witness);
            let lhs = C::tensor(
                &C::compose(mor(g), mor(f)).map_err(&err)?,
                &C::compose(mor(g2), mor(f2)).map_err(&err)?,
            )
            .map_err(&err)?;
            let rhs = C::compose(
                &C::tensor(mor(g), mor(g2)).map_err(&err)?,
                &C::tensor(mor(f), mor(f2)).map_err(&err)?,
            )
            .map_err(&err)?;
            C::check(&rhs).map_err(|v| v.within(LAW, &witness))?;
            if lhs != rhs {
                return Err(Violation::new(LAW, witness.clone()).with_sides("equal composites", "different composites"));
            }
        }
    }
    Ok(())
}

/// `iso` and `inverse` are morphisms and compose to identities both ways.
fn check_iso_pair<C: CoringCategory>(law: &'static str, witness: &str, iso: &CoringsMorphism) -> Verdict {
    let err = construction(law, witness);
    let inv_phi = iso
        .phi()
        .inverse()
        .ok_or_else(|| Violation::new(law, witness.to_string()).with_sides("an invertible map", "a singular map"))?;
    let inv_varphi = iso.varphi().inverse().ok_or_else(|| {
        Violation::new(law, witness.to_string()).with_sides("an invertible algebra map", "a singular algebra map")
    })?;
    let inverse =
        CoringsMorphism::new(iso.target().clone(), iso.source().clone(), inv_phi, inv_varphi).map_err(&err)?;
    iso.check().map_err(|v| v.within(law, witness))?;
    inverse.check().map_err(|v| v.within(law, witness))?;
    let fwd = C::from_iso(iso).map_err(&err)?;
    let back = C::from_iso(&inverse).map_err(&err)?;
    C::check(&fwd).map_err(|v| v.within(law, witness))?;
    C::check(&back).map_err(|v| v.within(law, witness))?;
    if C::compose(&back, &fwd).map_err(&err)? != C::identity(iso.source()) {
        return Err(Violation::new(law, witness.to_string()).with_sides("inverse . iso = id", "another morphism"));
    }
    if C::compose(&fwd, &back).map_err(&err)? != C::identity(iso.target()) {
        return Err(Violation::new(law, witness.to_string()).with_sides("iso . inverse = id", "another morphism"));
    }
    Ok(())
}

/// Index collapse `k (x) X = X = X (x) k` as a coring isomorphism.
fn unitor(c: &Arc<Coring>, unit_left: bool) -> Result<CoringsMorphism> {
    let k = unit_coring(c.field());
    let t = if unit_left {
        tensor_coring(&k, c)?
    } else {
        tensor_coring(c, &k)?
    };
    let t = Arc::new(t);
    let f = c.field();
    let phi = Mat::identity(f, c.dim());
    let alpha = AlgebraMorphism::new(t.base().clone(), c.base().clone(), Mat::identity(f, c.base().dim()))?;
    CoringsMorphism::new(t, c.clone(), phi, alpha)
}

fn unit_isos<C: CoringCategory>(family: &Family<C::Mor>) -> Verdict {
    const LAW: &str = "unit";
    for (name, c) in &family.corings {
        for (side, left) in [("left", true), ("right", false)] {
            let witness = format!("{side} unitor at {name}");
            let iso = unitor(c, left).map_err(construction(LAW, &witness))?;
            check_iso_pair::<C>(LAW, &witness, &iso)?;
        }
    }
    Ok(())
}

/// `((i, j), k) -> (i, (j, k))` on row-major indices.
fn reassociate(field: crate::exactla::Field, n1: usize, n2: usize, n3: usize) -> Mat {
    let n = n1 * n2 * n3;
    Mat::from_fn(field, n, n, |x, y| {
        let (ij, k) = (x / n3, x % n3);
        let (i, j) = (ij / n2, ij % n2);
        if y == i * (n2 * n3) + (j * n3 + k) {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// The re-association of `(C (x) C') (x) C''` onto `C (x) (C' (x) C'')`.
pub fn associator(c1: &Coring, c2: &Coring, c3: &Coring) -> Result<CoringsMorphism> {
    let left = Arc::new(tensor_coring(&tensor_coring(c1, c2)?, c3)?);
    let right = Arc::new(tensor_coring(c1, &tensor_coring(c2, c3)?)?);
    let f = c1.field();
    let phi = reassociate(f, c1.dim(), c2.dim(), c3.dim());
    let alpha_map = reassociate(f, c1.base().dim(), c2.base().dim(), c3.base().dim());
    let alpha = AlgebraMorphism::new(left.base().clone(), right.base().clone(), alpha_map)?;
    CoringsMorphism::new(left, right, phi, alpha)
}

fn associators<C: CoringCategory>(family: &Family<C::Mor>) -> Verdict {
    const LAW: &str = "associator";
    for (n1, c1) in &family.corings {
        for (n2, c2) in &family.corings {
            for (n3, c3) in &family.corings {
                if c1.dim() * c2.dim() * c3.dim() > family.max_dim {
                    continue;
                }
                let witness = format!("({n1} ⊗ {n2}) ⊗ {n3}");
                let iso = associator(c1, c2, c3).map_err(construction(LAW, &witness))?;
                check_iso_pair::<C>(LAW, &witness, &iso)?;
            }
        }
    }
    Ok(())
}
