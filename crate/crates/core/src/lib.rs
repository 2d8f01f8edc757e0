//! Finite groupoid analysis over Cayley tables.
//!
//! A [`Magma`] is an order `n` together with its `n x n` table over the
//! elements `0..n`. On top of that the crate offers property predicates with
//! counterexample witnesses, direct and binary-system products,
//! subgroupoid and divisibility checks, homomorphism search and canonical
//! forms, the reachability relation, an exhaustive census engine, and a
//! registry of bounded theorem checks that ties them together.

pub mod census;
pub mod constructions;
pub mod error;
pub mod magma;
pub mod morphisms;
pub mod properties;
pub mod relations;
pub mod subalgebra;
pub mod theorems;

pub use error::{MagmaError, Result};
pub use magma::{ElementSet, Magma};
pub use properties::{Filter, Property, PropertyVerdict};
