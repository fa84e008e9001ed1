//! Exact-arithmetic toolkit for signed graphs.
//!
//! Computes the rank of the signed adjacency matrix, the independence,
//! matching and cyclomatic numbers, and the cycle structure of a signed
//! graph, and checks the inequality
//! `2n - 2c(G) <= r(G, σ) + 2α(G) <= 2n` together with the structural
//! characterization of the graphs attaining the lower bound.

mod bitset;
pub mod cycles;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod generator;
pub mod graph;
pub mod invariants;
pub mod linalg;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Sign, SignedGraph, VertexSet};
