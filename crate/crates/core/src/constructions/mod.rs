//! Explicit decomposed graphs: the Hamiltonian two-chord construction and its
//! bipartite three-chord variant, the cycle blow-up of a regular graph,
//! projective-plane incidence graphs, and seeded random instances.

mod blowup;
mod gamma;
mod projective;
mod random;

use thiserror::Error;

use crate::graph::{GraphError, InvalidDecomposition};

pub use blowup::blow_up;
pub use gamma::{construct_gamma2, construct_gamma3, Gamma2Params};
pub use projective::{is_prime, projective_plane_incidence};
pub use random::{random_bridged_cubic, random_decomposed_regular, MAX_REJECTIONS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("parameter l must be at least 1")]
    LevelTooSmall,
    #[error("base graph is not regular")]
    NotRegular,
    #[error("base graph has degree {0}, at least 2 required")]
    DegreeTooSmall(usize),
    #[error("q = {0} is not prime")]
    NotPrime(usize),
    #[error("no {d}-regular decomposition on {n} vertices: {reason}")]
    BadSize {
        n: usize,
        d: usize,
        reason: &'static str,
    },
    #[error("rejection sampling gave up for seed {seed}; retry with another seed")]
    RejectionBudgetExhausted { seed: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Invalid(#[from] InvalidDecomposition),
}
