//! Mutual-visibility and total mutual-visibility sets in graphs, with a
//! focus on strong products.
//!
//! A set `X` of vertices is a *mutual-visibility set* when every two of its
//! members are joined by a shortest path whose internal vertices avoid `X`.
//! It is a *total* mutual-visibility set when every pair of vertices of the
//! graph, members or not, is joined by such a path.
//!
//! The crate provides:
//!
//! - [`graph`]: bit-row graphs, distances, geodesic intervals, convex hulls
//!   and block decompositions;
//! - [`families`]: generators for paths, cycles, cographs, cacti, block
//!   graphs and the other families used in tests and experiments;
//! - [`products`]: strong products with row-major tuple indexing;
//! - [`visibility`]: set checkers, exact branch-and-bound solvers for the
//!   mutual-visibility number `mu` and the total number `mu_t`, a
//!   brute-force oracle and a local-search heuristic;
//! - [`constructions`]: certified set builders for products, grids and
//!   prisms, plus classifiers for cographs and cacti;
//! - [`format`] and [`cli`]: edge-list and certificate files and the
//!   `mutvis` command line.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod products;
pub mod visibility;

pub use error::{Error, Result};
pub use graph::{build_graph, Graph, VertexSet};
