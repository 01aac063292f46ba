//! The category of right extensions, the category of corings, and checks of
//! their monoidal structure.

mod bridge;
mod corings;
pub mod corpus;
mod ext;
mod monoidal;

pub use bridge::{corings_to_ext, multiplication_iso};
pub use corings::{check_corings_morphism, corings_compose, corings_tensor_morphisms, CoringsMorphism};
pub use ext::{
    check_ext_morphism, ext_compose, ext_compose_via_cotensor, ext_counit, ext_grouplike, ext_identity,
    ext_tensor_morphisms, ext_to_unit, ExtMorphism,
};
pub use monoidal::{
    associator, monoidal_parts, verify_corings_monoidal, verify_ext_monoidal, verify_monoidal, CoringCategory, Corings,
    Ext, Family, MONOIDAL_PARTS,
};
