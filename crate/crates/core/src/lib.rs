//! Exact combinatorics around the bivariate Catalan polynomial that counts
//! Dyck paths by area and by rank.
//!
//! The modules build on each other: [`lattice_paths`] and [`noncrossing`]
//! supply the objects, [`su_words`] the word encoding and the Motzkin
//! decomposition, [`polynomials`] the generating functions and their
//! expansions, [`absolute_order`] the permutation side, and [`type_b`] the
//! signed analogue.

pub mod absolute_order;
pub mod error;
pub mod lattice_paths;
pub mod noncrossing;
pub mod polynomials;
pub mod su_words;
pub mod type_b;

pub use error::{Error, Result};
