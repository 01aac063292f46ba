//! Corings over finite-dimensional algebras, computed exactly.
//!
//! The crate builds corings, comodules and coring extensions over algebras
//! given by structure constants, forms their tensor products over the ground
//! field, and checks every axiom as an exact matrix identity. The ground ring
//! is always a field (`Q` or `F_p`).

pub mod algcore;
pub mod bimod;
pub mod cat;
pub mod cli;
pub mod constr;
pub mod coring;
pub mod error;
pub mod exactla;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::{Verdict, Violation};
