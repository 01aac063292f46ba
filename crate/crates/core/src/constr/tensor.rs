use std::sync::Arc;

use crate::bimod::{reshuffle_kron, tensor_over_k};
use crate::coring::Coring;
use crate::error::{Error, Result};

/// `C (x)_k C'` as an `A (x) A'`-coring with
/// `Delta(c (x) c') = (c_(1) (x) c'_(1)) (x) (c_(2) (x) c'_(2))` and counit `epsilon (x) epsilon'`.
pub fn tensor_coring(c: &Coring, c2: &Coring) -> Result<Coring> {
    if c.field() != c2.field() {
        return Err(Error::FieldMismatch);
    }
    let carrier = Arc::new(tensor_over_k(c.carrier(), c2.carrier())?);
    let (n, n2) = (c.dim(), c2.dim());
    let lift = reshuffle_kron(c.comul_lift(), c2.comul_lift(), (n, n), (n2, n2));
    let counit = c.counit().kron(c2.counit());
    Coring::new(carrier, lift, counit)
}
