//! Permutation classes avoiding `123` plus further patterns, whose counting
//! sequences sit between the Fibonacci and the Catalan numbers.
//!
//! Each class is counted five ways: brute force over `Sₙ`, its generating
//! tree, a succession rule, a production matrix, and a generating function.
//! The [`catalog`] ties the five together for every named class.

pub mod catalog;
pub mod cli;
pub mod counts;
pub mod genfunc;
pub mod perm_core;
pub mod production_matrix;
pub mod succession;

pub use catalog::{catalog, lookup, ClassCatalogEntry, GfSource, PatternFamily};
pub use counts::{Count, CountSeries};
pub use genfunc::{gf_equal, ChainKind, IntPolynomial, RationalGF};
pub use perm_core::{contains, AvoidanceClass, Limits, Pattern, Permutation};
pub use production_matrix::{ProductionMatrix, TruncationSpec};
pub use succession::{Label, SuccessionRule};
