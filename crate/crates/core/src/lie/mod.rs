//! Root data, Weyl groups and coordinate conventions for the classical families.

mod datum;
mod group;
mod weight;
mod weyl;

pub use datum::{
    build_root_datum, k_dominant, root_product, weyl_elements, Lattice, Root, RootDatum, Which,
};
pub use group::{GroupId, RootType};
pub use weight::{pairing, Weight};
pub use weyl::{generate_group, WeylElement};
