use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use corings::algcore::AlgebraMorphism;
use corings::bimod::{random_hom, Bimodule, NaturalitySquare};
use corings::cat::corpus::Objects;
use corings::cat::{corings_tensor_morphisms, ext_compose, ext_compose_via_cotensor, CoringsMorphism, ExtMorphism};
use corings::constr::{tensor_coring, tensor_extension};
use corings::coring::Coring;
use corings::exactla::{Field, Mat};

const F5: Field = Field::Prime(5);

fn small_mat(field: Field, n: usize) -> impl Strategy<Value = Mat> {
    prop::collection::vec(-4i64..=4, n * n)
        .prop_map(move |xs| Mat::from_fn(field, n, n, |i, j| field.from_i64(xs[i * n + j])))
}

fn fixtures(field: Field) -> Vec<Arc<Coring>> {
    let o = Objects::new(field);
    vec![o.k, o.c2, o.v4, o.m2, o.sweedler, o.dual]
}

/// The coalgebra map sending grouplike `i` to grouplike `f[i]`.
fn grouplike_map(field: Field, f: &[usize], target_dim: usize) -> Mat {
    let mut m = Mat::zeros(field, f.len(), target_dim);
    for (i, &j) in f.iter().enumerate() {
        m.set(i, j, field.one());
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn inverse_is_two_sided(m in small_mat(F5, 3)) {
        if let Some(inv) = m.inverse() {
            prop_assert_eq!(m.mul(&inv), Mat::identity(F5, 3));
            prop_assert_eq!(inv.mul(&m), Mat::identity(F5, 3));
        } else {
            prop_assert!(m.rank() < 3);
        }
    }

    #[test]
    fn rank_plus_nullity(m in small_mat(Field::Rationals, 4)) {
        prop_assert_eq!(m.rank() + m.kernel().dim(), 4);
    }

    #[test]
    fn solve_left_recovers_combination(m in small_mat(Field::Rationals, 3), x in small_mat(Field::Rationals, 3)) {
        let b = x.mul(&m);
        let y = m.solve_left(&b).expect("b lies in the row space");
        prop_assert_eq!(y.mul(&m), b);
    }

    #[test]
    fn scalars_print_and_parse(n in -1000i64..1000, d in 1i64..50) {
        let q = Field::Rationals;
        let x = q.from_i64(n) * q.from_i64(d).inv().unwrap();
        prop_assert_eq!(q.parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn tensor_of_fixtures_is_a_coring(i in 0usize..6, j in 0usize..6, prime in prop::bool::ANY) {
        let field = if prime { F5 } else { Field::Rationals };
        let fx = fixtures(field);
        let t = tensor_coring(&fx[i], &fx[j]).unwrap();
        prop_assert_eq!(t.dim(), fx[i].dim() * fx[j].dim());
        prop_assert_eq!(t.counit(), &fx[i].counit().kron(fx[j].counit()));
        prop_assert_eq!(t.check(), Ok(()));
    }

    #[test]
    fn grouplike_maps_compose_functorially(f in prop::collection::vec(0usize..4, 4), g in prop::collection::vec(0usize..2, 4)) {
        let o = Objects::new(F5);
        let fm = grouplike_map(F5, &f, 4);
        let gm = grouplike_map(F5, &g, 2);
        let ef = ExtMorphism::from_coalgebra_map(o.v4.clone(), o.v4.clone(), &fm).unwrap();
        let eg = ExtMorphism::from_coalgebra_map(o.v4.clone(), o.c2.clone(), &gm).unwrap();
        prop_assert_eq!(ef.check(), Ok(()));
        let composite = ext_compose(&eg, &ef).unwrap();
        let direct = ExtMorphism::from_coalgebra_map(o.v4.clone(), o.c2.clone(), &fm.mul(&gm)).unwrap();
        prop_assert_eq!(&composite, &direct);
        prop_assert_eq!(ext_compose_via_cotensor(&eg, &ef).unwrap(), composite);
    }

    #[test]
    fn tensor_of_grouplike_extensions_validates(f in prop::collection::vec(0usize..4, 2), g in prop::collection::vec(0usize..2, 2)) {
        let o = Objects::new(Field::Rationals);
        let q = Field::Rationals;
        let e = ExtMorphism::from_coalgebra_map(o.c2.clone(), o.v4.clone(), &grouplike_map(q, &f, 4)).unwrap();
        let e2 = ExtMorphism::from_coalgebra_map(o.c2.clone(), o.c2.clone(), &grouplike_map(q, &g, 2)).unwrap();
        let t = tensor_extension(e.extension(), e2.extension());
        prop_assert!(t.is_ok(), "{:?}", t.err());
    }

    #[test]
    fn grouplike_corings_morphisms_tensor(f in prop::collection::vec(0usize..4, 2), g in prop::collection::vec(0usize..4, 4)) {
        let o = Objects::new(F5);
        let id = AlgebraMorphism::identity(o.k.base().clone());
        let m = CoringsMorphism::new(o.c2.clone(), o.v4.clone(), grouplike_map(F5, &f, 4), id.clone()).unwrap();
        let m2 = CoringsMorphism::new(o.v4.clone(), o.v4.clone(), grouplike_map(F5, &g, 4), id).unwrap();
        prop_assert_eq!(m.check(), Ok(()));
        let t = corings_tensor_morphisms(&m, &m2).unwrap();
        prop_assert_eq!(t.phi(), &m.phi().kron(m2.phi()));
        prop_assert_eq!(t.check(), Ok(()));
    }

    #[test]
    fn eta_is_natural_for_random_maps(seed in any::<u64>(), i in 0usize..6, j in 0usize..6) {
        let fx = fixtures(F5);
        let (c, c2) = (&fx[i], &fx[j]);
        let m = Arc::new(Bimodule::regular(c.base().clone()).right_module());
        let m2 = Arc::new(c.carrier().right_module());
        let n = Arc::new(Bimodule::regular(c2.base().clone()).right_module());
        let n2 = Arc::new(c2.carrier().right_module());
        let square = NaturalitySquare::new(
            m.clone(), m2.clone(), n.clone(), n2.clone(), c.carrier().clone(), c2.carrier().clone(),
        ).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_hom(&m, &m2, &mut rng);
        let g = random_hom(&n, &n2, &mut rng);
        prop_assert_eq!(square.check(&f, &g).unwrap(), Ok(()));
    }
}
