//! Petersen decompositions of bridgeless cubic graphs and the rewiring that
//! removes bridges from cubic graphs without lowering their girth.

mod matching;
mod petersen;
mod rewire;

pub use matching::maximum_matching;
pub use petersen::{decompose_with_matching, petersen_decompose, DecomposeError};
pub use rewire::{eliminate_bridges, eliminate_bridges_traced, RewireError, RewireStep};
