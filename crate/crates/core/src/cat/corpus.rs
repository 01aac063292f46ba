//! The fixed corpus of corings and morphisms the category checks run on.

use std::sync::Arc;

use super::corings::CoringsMorphism;
use super::ext::{ext_counit, ext_grouplike, ext_identity, ext_to_unit, ExtMorphism};
use super::monoidal::Family;
use crate::algcore::{Algebra, AlgebraMorphism};
use crate::constr::fixtures::{
    cyclic2_table, grouplike_coalgebra, klein_table, matrix_coalgebra, sweedler_coring, unit_coring,
};
use crate::coring::Coring;
use crate::exactla::{Field, Mat};

/// The corings of the corpus: `k`, `k[C2]`, `k[C2xC2]`, the 2x2 matrix
/// coalgebra, the Sweedler coring of `k` in the dual numbers, and the
/// trivial coring of the dual numbers.
pub struct Objects {
    pub k: Arc<Coring>,
    pub c2: Arc<Coring>,
    pub v4: Arc<Coring>,
    pub m2: Arc<Coring>,
    pub sweedler: Arc<Coring>,
    pub dual: Arc<Coring>,
}

impl Objects {
    pub fn new(field: Field) -> Objects {
        let a = Arc::new(Algebra::dual_numbers(field));
        let iota = AlgebraMorphism::new(
            Arc::new(Algebra::ground(field)),
            a.clone(),
            Mat::from_i64(field, &[&[1, 0]]),
        )
        .expect("unit inclusion is well shaped");
        Objects {
            k: Arc::new(unit_coring(field)),
            c2: Arc::new(grouplike_coalgebra(field, &cyclic2_table(), &["e", "g"]).expect("C2 table")),
            v4: Arc::new(grouplike_coalgebra(field, &klein_table(), &["e", "a", "b", "ab"]).expect("Klein table")),
            m2: Arc::new(matrix_coalgebra(field, 2)),
            sweedler: Arc::new(sweedler_coring(&iota).expect("the unit inclusion is injective")),
            dual: Arc::new(Coring::trivial(a)),
        }
    }

    pub fn named(&self) -> Vec<(String, Arc<Coring>)> {
        [
            ("k", &self.k),
            ("kC2", &self.c2),
            ("kV4", &self.v4),
            ("M2", &self.m2),
            ("S", &self.sweedler),
            ("A", &self.dual),
        ]
        .into_iter()
        .map(|(n, c)| (n.to_string(), c.clone()))
        .collect()
    }

    /// `e -> e`, `g -> a` from `k[C2]` into `k[C2xC2]`.
    pub fn inclusion_map(&self) -> Mat {
        Mat::from_i64(self.k.field(), &[&[1, 0, 0, 0], &[0, 1, 0, 0]])
    }

    /// The algebra map `x -> 0` from the dual numbers onto `k`.
    pub fn collapse(&self) -> AlgebraMorphism {
        let f = self.k.field();
        AlgebraMorphism::new(
            self.dual.base().clone(),
            self.k.base().clone(),
            Mat::from_i64(f, &[&[1], &[0]]),
        )
        .expect("collapse is well shaped")
    }
}

/// A morphism sequence `f, g, h` with `h . g . f` defined, as indices.
pub type Chain = [usize; 3];

pub struct ExtCorpus {
    pub family: Family<ExtMorphism>,
    pub chains: Vec<Chain>,
}

pub fn ext_corpus(field: Field) -> ExtCorpus {
    let o = Objects::new(field);
    let incl = ExtMorphism::from_coalgebra_map(o.c2.clone(), o.v4.clone(), &o.inclusion_map())
        .expect("inclusion is well shaped");
    let morphisms: Vec<(String, ExtMorphism)> = vec![
        ("g", ext_grouplike(o.c2.clone(), 1).expect("g is a basis element")),
        ("incl", incl),
        ("to_k(kV4)", ext_to_unit(o.v4.clone())),
        ("eps(S)", ext_counit(o.sweedler.clone())),
        ("to_k(A)", ext_to_unit(o.dual.clone())),
        ("id(M2)", ext_identity(o.m2.clone())),
        ("to_k(M2)", ext_to_unit(o.m2.clone())),
        ("a", ext_grouplike(o.v4.clone(), 1).expect("a is a basis element")),
    ]
    .into_iter()
    .map(|(n, m)| (n.to_string(), m))
    .collect();
    ExtCorpus {
        family: Family {
            corings: o.named(),
            morphisms,
            pairs: vec![(0, 1), (3, 4), (6, 0), (1, 2)],
            max_dim: 8,
        },
        chains: vec![[0, 1, 2], [3, 4, 0], [5, 6, 7]],
    }
}

pub struct CoringsCorpus {
    pub family: Family<CoringsMorphism>,
    pub chains: Vec<Chain>,
}

pub fn corings_corpus(field: Field) -> CoringsCorpus {
    let o = Objects::new(field);
    let id_k = AlgebraMorphism::identity(o.k.base().clone());
    let pick = |d: &Arc<Coring>, g: usize| {
        let mut phi = Mat::zeros(field, 1, d.dim());
        phi.set(0, g, field.one());
        CoringsMorphism::new(o.k.clone(), d.clone(), phi, id_k.clone()).expect("grouplike pick is well shaped")
    };
    let collapse = o.collapse();
    let collapse_a = CoringsMorphism::new(o.dual.clone(), o.k.clone(), collapse.map().clone(), collapse.clone())
        .expect("collapse is well shaped");
    let collapse_s = CoringsMorphism::new(
        o.sweedler.clone(),
        o.k.clone(),
        o.sweedler.counit().mul(collapse.map()),
        collapse,
    )
    .expect("collapse is well shaped");
    let incl = CoringsMorphism::new(o.c2.clone(), o.v4.clone(), o.inclusion_map(), id_k.clone())
        .expect("inclusion is well shaped");
    let morphisms: Vec<(String, CoringsMorphism)> = vec![
        ("g", pick(&o.c2, 1)),
        ("incl", incl),
        ("eps(kV4)", CoringsMorphism::counit(o.v4.clone())),
        ("eps(S)", CoringsMorphism::counit(o.sweedler.clone())),
        ("collapse(A)", collapse_a),
        ("eps(M2)", CoringsMorphism::counit(o.m2.clone())),
        ("a", pick(&o.v4, 1)),
        ("collapse(S)", collapse_s),
        ("id(M2)", CoringsMorphism::identity(o.m2.clone())),
    ]
    .into_iter()
    .map(|(n, m)| (n.to_string(), m))
    .collect();
    CoringsCorpus {
        family: Family {
            corings: o.named(),
            morphisms,
            pairs: vec![(0, 1), (3, 4), (5, 0), (1, 2)],
            max_dim: 8,
        },
        chains: vec![[0, 1, 2], [3, 4, 0], [8, 5, 6]],
    }
}
