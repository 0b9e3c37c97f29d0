//! Activity expansions of the Tutte polynomial of a multigraph.
//!
//! Every expansion here is a sum over spanning forests, subsets, or
//! orientations of a monomial recording some notion of "activity". Each one
//! is checked against the subset-rank sum in [`tutte::tutte_whitney`].

pub mod bernardi;
pub mod complexes;
pub mod corpus;
pub mod decision;
pub mod dfs;
pub mod edgeset;
pub mod error;
pub mod forest;
pub mod graph;
pub mod orientation;
pub mod poly;
pub mod structure;
pub mod subgraph;
pub mod tutte;
pub mod verify;

pub use edgeset::EdgeSubset;
pub use error::{Error, Result};
pub use graph::Graph;
pub use poly::{MultiPoly, Var};
