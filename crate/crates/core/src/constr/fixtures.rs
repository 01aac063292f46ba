//! Small corings used throughout the tests, the acceptance suite and the
//! workspace `fixture` shorthand.

use std::sync::Arc;

use crate::algcore::{Algebra, AlgebraMorphism};
use crate::bimod::{Bimodule, PresentedTensor};
use crate::coring::Coring;
use crate::error::{Error, Result};
use crate::exactla::{kron_vec, Field, Mat};

/// `(A : A)`.
pub fn trivial_coring(a: Arc<Algebra>) -> Coring {
    Coring::trivial(a)
}

/// The ground field as a coring over itself, the monoidal unit.
pub fn unit_coring(field: Field) -> Coring {
    Coring::trivial(Arc::new(Algebra::ground(field)))
}

/// The dual of `M_n(k)`: basis `e_ij`, `Delta(e_ij) = sum_t e_it (x) e_tj`,
/// `epsilon(e_ij) = delta_ij`.
pub fn matrix_coalgebra(field: Field, n: usize) -> Coring {
    let dim = n * n;
    let labels = (0..dim).map(|k| format!("e_{}{}", k / n + 1, k % n + 1)).collect();
    let carrier = Arc::new(Bimodule::vector_space(field, labels));
    let mut lift = Mat::zeros(field, dim, dim * dim);
    let mut counit = Mat::zeros(field, dim, 1);
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            for t in 0..n {
                lift.set(row, (i * n + t) * dim + t * n + j, field.one());
            }
            if i == j {
                counit.set(row, 0, field.one());
            }
        }
    }
    Coring::new(carrier, lift, counit).expect("matrix coalgebra is well shaped")
}

/// The group coalgebra `k[G]`: every group element is grouplike. The table is
/// validated as a group multiplication table although only the labels are used.
pub fn grouplike_coalgebra(field: Field, table: &[Vec<usize>], labels: &[&str]) -> Result<Coring> {
    let group = Algebra::group_algebra(field, table, labels)?;
    let n = group.dim();
    let carrier = Arc::new(Bimodule::vector_space(field, group.labels().to_vec()));
    let mut lift = Mat::zeros(field, n, n * n);
    let mut counit = Mat::zeros(field, n, 1);
    for g in 0..n {
        lift.set(g, g * n + g, field.one());
        counit.set(g, 0, field.one());
    }
    Coring::new(carrier, lift, counit)
}

/// The Sweedler coring `A (x)_B A` of an inclusion `B -> A`:
/// `Delta(a (x) a') = (a (x) 1) (x)_A (1 (x) a')`, `epsilon(a (x) a') = aa'`.
pub fn sweedler_coring(iota: &AlgebraMorphism) -> Result<Coring> {
    if !iota.is_injective() {
        return Err(Error::NotInjective);
    }
    let a = iota.target().clone();
    let field = a.field();
    let reg = Bimodule::regular(a.clone());
    let a_ab = Arc::new(reg.restrict_right(iota)?);
    let a_ba = Arc::new(reg.restrict_left(iota)?);
    let t = PresentedTensor::new(a_ab, a_ba)?;
    t.verify_actions()?;
    let n = t.dim();
    let mut lift_rows = Vec::with_capacity(n);
    let mut counit_rows = Vec::with_capacity(n);
    for k in 0..n {
        let (i, j) = t.rep(k);
        let (ei, ej) = (a.basis_vector(i), a.basis_vector(j));
        lift_rows.push(kron_vec(&t.pure(&ei, a.unit()), &t.pure(a.unit(), &ej)));
        counit_rows.push(a.basis_product(i, j).to_vec());
    }
    let lift = Mat::from_rows(field, n * n, lift_rows)?;
    let counit = Mat::from_rows(field, a.dim(), counit_rows)?;
    Coring::new(t.result().clone(), lift, counit)
}

/// `k[C_2] = {e, g}` multiplication table.
pub fn cyclic2_table() -> Vec<Vec<usize>> {
    vec![vec![0, 1], vec![1, 0]]
}

/// `k[C_2 x C_2]` multiplication table, elements ordered `e, a, b, ab`.
pub fn klein_table() -> Vec<Vec<usize>> {
    (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_coring_is_one_dimensional() {
        let k = unit_coring(Field::Rationals);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.check(), Ok(()));
    }

    #[test]
    fn matrix_comultiplication_of_e11() {
        let f = Field::Prime(5);
        let c = matrix_coalgebra(f, 2);
        // e_11 (x) e_11 + e_12 (x) e_21, indices 0*4+0 and 1*4+2
        let nonzero: Vec<(usize, usize)> = c.sweedler(0).iter().map(|(j, k, _)| (*j, *k)).collect();
        assert_eq!(nonzero, vec![(0, 0), (1, 2)]);
        assert_eq!(c.labels()[1], "e_12");
    }

    #[test]
    fn grouplike_fixtures_pass() {
        for f in [Field::Rationals, Field::Prime(5)] {
            assert_eq!(
                grouplike_coalgebra(f, &cyclic2_table(), &["e", "g"]).unwrap().check(),
                Ok(())
            );
            let k4 = grouplike_coalgebra(f, &klein_table(), &["e", "a", "b", "ab"]).unwrap();
            assert_eq!(k4.check(), Ok(()));
        }
    }

    #[test]
    fn sweedler_of_identity_is_trivial_sized() {
        let f = Field::Rationals;
        let a = Arc::new(Algebra::upper_triangular(f));
        let c = sweedler_coring(&AlgebraMorphism::identity(a)).unwrap();
        assert_eq!(c.dim(), 3);
        assert_eq!(c.check(), Ok(()));
    }

    #[test]
    fn non_injective_inclusion_rejected() {
        let f = Field::Rationals;
        let a = Arc::new(Algebra::dual_numbers(f));
        let k = Arc::new(Algebra::ground(f));
        let collapse = AlgebraMorphism::new(a, k, Mat::from_i64(f, &[&[1], &[0]])).unwrap();
        assert_eq!(sweedler_coring(&collapse), Err(Error::NotInjective));
    }
}
