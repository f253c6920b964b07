//! Short cycles with few chords.
//!
//! A cubic graph whose edge set is split into a 2-factor and a perfect
//! matching (a *Petersen decomposition*) has its cycles classified by how many
//! matching edges ("chords") they use. This crate builds the extremal
//! decomposed graphs for that problem, computes the shortest cycle using at
//! most `k` chords exactly, decomposes bridgeless cubic graphs, evaluates the
//! known closed-form bounds and exhaustively computes `gamma_k(n)` for small
//! `n`.
//!
//! Everything generalises to `d`-regular graphs with a prescribed 2-factor,
//! where every vertex carries `d - 2` chords.

pub mod bounds;
pub mod constructions;
pub mod data;
pub mod decompose;
pub mod graph;
pub mod search;
pub mod solver;
pub mod verify;

pub use graph::{DecomposedGraph, Edge, Graph, GraphError, Violation};
pub use solver::{min_chord_cycle, min_chord_cycle_all_k, ChordCycleResult, SolveError};
