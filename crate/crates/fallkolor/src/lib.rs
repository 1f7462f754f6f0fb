//! Fall colorings of Kneser graphs.
//!
//! A fall k-coloring of a graph is a proper k-coloring in which every vertex
//! sees all k colors on its closed neighborhood; equivalently, a partition of
//! the vertex set into k maximal independent sets. This crate provides:
//!
//! * [`combinatorics`] — subset ranking, binomial coefficients, block-design
//!   verification, and Steiner triple system construction;
//! * [`graph`] — bit-row graphs, the Kneser graph generator, and DIMACS I/O;
//! * [`coloring`] — coloring and fall-coloring verification, type-II graph
//!   homomorphisms, and coloring pullback;
//! * [`constructions`] — explicit fall colorings from block designs, from
//!   star-plus-triangle edge partitions of the complete graph, and from
//!   homomorphism lifts;
//! * [`solver`] — exhaustive fall-coloring search via maximal-independent-set
//!   enumeration and exact cover, yielding the full fall spectrum of a graph;
//! * [`bounds`] — closed-form spectra for the known Kneser cases and the
//!   Hilton–Milner-based bounds on the fall chromatic numbers.
//!
//! All operations are deterministic: identical inputs produce identical
//! outputs, including solver witnesses, regardless of worker count.

pub mod bounds;
pub mod coloring;
pub mod combinatorics;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod solver;

pub use error::{Error, Result};
