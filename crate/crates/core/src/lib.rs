//! Bounds on the maximum likelihood threshold, rank, weak maximum likelihood
//! threshold and score matching threshold of a graph.
//!
//! The rank of a graph is the smallest `n` such that its edge set is
//! independent in the generic rigidity matroid of dimension `n - 1`. It bounds
//! the maximum likelihood threshold from above and equals the score matching
//! threshold. Generic independence is decided by evaluating rigidity (or Gram)
//! Jacobians at random points over a 61- or 62-bit prime field; dimension one
//! and two are also decided combinatorially by the pebble game.
//!
//! ```
//! use mlt_core::{graph::generate_named, rigidity::rank_of_graph, Settings};
//!
//! let grid = generate_named("grid", &[3, 3]).unwrap();
//! assert_eq!(rank_of_graph(&grid, &Settings::default()), 3);
//! ```

// Matrix code reads better with explicit row and column indices.
#![allow(clippy::needless_range_loop)]

pub mod engine;
pub mod graph;
pub mod linalg;
pub mod report;
pub mod rigidity;
pub mod rng;
pub mod score;
pub mod settings;
pub mod splitting;
pub mod symmetric;
pub mod wmlt;

pub use graph::{generate_named, parse_graph, BipartiteGraph, Graph, GraphError, Vertex};
pub use linalg::{FieldMatrix, Prime, RealMatrix};
pub use report::{BoundsReport, Certificate, Invariant};
pub use rng::RandomSource;
pub use settings::Settings;
