//! Exact Roman domination on Cartesian and strong product graphs.
//!
//! * [`graph`], [`family`], [`graph6`]: graphs as bitset adjacency, named
//!   families, products and graph6 I/O.
//! * [`solver`]: exact γ, γ_R, P₂, perfect codes and the enumeration of all
//!   optimal Roman dominating functions.
//! * [`constructions`]: explicit Roman dominating functions on products that
//!   realize the known upper bounds.
//! * [`bounds`]: a registry of product-graph inequalities and a harness that
//!   checks them against exact values.

pub mod bitset;
pub mod bounds;
pub mod constructions;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod rdf;
pub mod solver;

pub use bitset::{VertexSet, Word, WORD_BITS};
pub use error::{Error, Result};
pub use family::{make_family, FamilySpec};
pub use graph::{product, Graph, ProductKind};
pub use graph6::{parse_graph6, write_graph6};
pub use rdf::{validate_rdf, RomanFunction};
pub use solver::{InvariantResult, Solver, SolverConfig};
