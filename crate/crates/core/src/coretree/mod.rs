//! Vertices of the infinite binary tree and the exact dyadics that label them.
//!
//! A vertex has three interchangeable coordinates: its [`VertexAddress`]
//! (left/right path from the root), its [`StandardInterval`] and the
//! [`Dyadic`] midpoint of that interval. The midpoint map is an order
//! isomorphism from the infix order onto the dyadics in `(0, 1)`.

mod dyadic;
mod vertex;

pub use dyadic::Dyadic;
pub use vertex::{
    address_to_interval, infix_compare, interval_to_address, region_of, tree_distance,
    vertex_of_midpoint, RegionClass, StandardInterval, VertexAddress,
};
