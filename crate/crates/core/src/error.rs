use thiserror::Error;

use crate::verdict::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("unrecognised field `{0}`")]
    BadField(String),
    #[error("cannot parse scalar `{0}`")]
    BadScalar(String),
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("{side} action of {element} does not preserve the tensor relations")]
    IllDefinedAction { side: &'static str, element: String },
    #[error("map does not descend to the quotient: {0}")]
    DescentFailure(String),
    #[error("algebra map is not injective")]
    NotInjective,
    #[error("objects do not match: {0}")]
    ObjectMismatch(String),
    #[error("expected an isomorphism: {0}")]
    IsoFailure(String),
    #[error("map is not linear: {0}")]
    NotLinear(Violation),
    #[error("not a bimodule: {0}")]
    NotABimodule(Violation),
    #[error("comultiplication is not right linear: {0}")]
    DeltaNotRightLinear(Violation),
    #[error("not a coaction: {0}")]
    NotACoaction(Violation),
    #[error("coaction is not left colinear: {0}")]
    NotColinear(Violation),
    #[error("invalid corings morphism: {0}")]
    InvalidMorphism(Violation),
}
