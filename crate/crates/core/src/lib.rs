//! Exact search and verification for normal edge-colorings of cubic graphs.

pub mod coloring;
pub mod constructions;
pub mod graph;
pub mod homomorphism;
pub mod solver;
