//! Computational workbench for the subtractive ideal structure of finite
//! commutative semirings.
//!
//! The crate provides:
//!
//! - dense-table finite semirings with full axiom validation and the
//!   standard generator families (truncated naturals, chain lattices,
//!   min-plus, `Z/nZ`, products);
//! - an ideal engine: generation, k-closure, saturation, radical, sums,
//!   products, colons, and exact enumeration of all ideals and k-ideals;
//! - classification of an ideal against the prime / semiprime / primary /
//!   irreducible / strongly irreducible / maximal hierarchy and their
//!   k-variants;
//! - Bourne quotients, localisations at multiplicative sets, extension and
//!   contraction along homomorphisms, and spectral maps;
//! - a congruence engine with the k-congruence correspondence, excellent
//!   congruences, and saturated ideals;
//! - symbolic models of `(N, +, .)` and the min-plus semiring on
//!   `N ∪ {inf}`, backed by a bounded brute-force oracle;
//! - a law-suite harness that replays the structure theorems over a corpus
//!   of instances and reports violations as findings with witnesses.

pub mod budget;
pub mod classify;
pub mod congruence;
pub mod corpus;
pub mod error;
pub mod hom;
pub mod ideal;
pub mod localize;
pub mod nat;
pub mod quotient;
pub mod semiring;
pub mod set;
pub mod suite;

pub use budget::Budget;
pub use error::{Error, Result};
pub use semiring::FiniteSemiring;
pub use set::{CarrierSet, Elem};
