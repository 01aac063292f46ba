//! Exact linear algebra over `Q` and `F_p`.
//!
//! Everything downstream is phrased as matrices acting on row vectors, so a
//! linear map `V -> W` is a `dim V x dim W` matrix and "apply `f` then `g`"
//! is the product `f * g`.

mod field;
mod mat;
mod sparse;
mod subspace;

pub use field::{Field, Scalar};
pub use mat::Mat;
pub use sparse::SparseVec;
pub use subspace::{quotient, EchelonBuilder, QuotientSpace, Subspace};

/// Coordinates of `x (x) y` in row-major pair indexing.
pub fn kron_vec(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for a in x {
        for b in y {
            out.push(a * b);
        }
    }
    out
}

/// Renders a coordinate vector as a linear combination of `labels`.
pub fn format_vector(labels: &[String], v: &[Scalar]) -> String {
    let mut terms = Vec::new();
    for (x, label) in v.iter().zip(labels) {
        if x.is_zero() {
            continue;
        }
        if x.is_one() {
            terms.push(label.clone());
        } else {
            terms.push(format!("{x}*{label}"));
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}
