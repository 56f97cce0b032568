//! Exact computations in Thompson's group F with generators `x0, x1` and
//! their inverses: tree pair diagrams, dyadic PL maps, the action on the
//! infinite binary tree, Cayley-graph geodesics and the word families used to
//! study near-geodesic representatives.

pub mod action;
pub mod coretree;
pub mod element;
pub mod error;
pub mod harness;
pub mod metric;

pub use error::{Error, ParseError, Result};
