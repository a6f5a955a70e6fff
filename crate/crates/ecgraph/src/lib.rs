//! Edge-colored graph toolkit: rainbow C3/C4 detection, spanning bipartite
//! extraction with color-degree guarantees, projective-plane extremal
//! constructions, theorem hypothesis checkers, and seeded counterexample
//! hunts, with text formats (`.ecg`, `.dcg`) for all instance types.

pub mod bipartize;
pub mod format;
pub mod gen;
pub mod graph;
pub mod hunt;
pub mod projective;
pub mod rainbow;
pub mod verify;

pub use graph::{ColorSet, Cycle, EdgeColoredGraph, GraphError};
pub use rainbow::RainbowWitness;
