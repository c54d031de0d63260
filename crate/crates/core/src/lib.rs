//! Computation in graph products of directly-indecomposable cyclic groups.
//!
//! A graph product `W(Γ, m)` is generated by the vertices of a finite simple
//! graph `Γ`, where vertex `v` has order `m(v)` (a prime power or infinity)
//! and two generators commute exactly when their vertices are adjacent.
//!
//! The crate is layered:
//!
//! - [`graph`]: labeled graphs, links, stars, components, cliques and the
//!   separating-intersection-of-links search.
//! - [`word`]: canonical normal forms, projections, centralizer tests and
//!   cyclic reduction.
//! - [`aut`]: partial conjugations, the generating sets `P`, `P0` and `L_i`,
//!   composition of conjugating automorphisms, retractions, inner-automorphism
//!   witnesses and the retraction onto graph-induced automorphisms.
//! - [`structure`]: pair classification, abelianness of `Out0`, the tree
//!   decomposition, vcd and the hyperbolicity/splitting predicates.
//! - [`enumerate`]: small-graph enumeration and random trees for exhaustive
//!   checks.
//! - [`cli`]: the `gpauto` command-line front end.

pub mod aut;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod report;
pub mod structure;
pub mod word;

pub use error::{Error, Result};
pub use graph::{LabeledGraph, OrderValue, SilWitness, VertexSet};
pub use word::{NormalForm, Syllable, Word};
