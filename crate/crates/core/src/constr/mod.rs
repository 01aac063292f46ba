//! Constructions on corings: tensor products, right extensions, base ring
//! extensions, and a small corpus of fixtures.

mod base_ext;
mod extension;
pub mod fixtures;
mod tensor;

pub use base_ext::{base_ring_extension, BaseRingExtension};
pub use extension::{
    make_right_extension, regular_extension, tensor_extension, tensor_extension_unchecked, trivial_extension,
    unit_extension, RightExtension, EXTENSION_CONDITIONS,
};
pub use fixtures::{grouplike_coalgebra, matrix_coalgebra, sweedler_coring, trivial_coring, unit_coring};
pub use tensor::tensor_coring;
