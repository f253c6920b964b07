//! Exhaustive computation of `gamma_k(n)` for small `n`, and the weight of
//! cycle partitions that drives the two-chord upper bound.

mod checkpoint;
mod exhaustive;
mod partition;
mod types;

use thiserror::Error;

pub use exhaustive::{
    exhaustive_gamma, PruneMode, SearchOptions, SearchResult, DEFAULT_MAX_N, ORBIT_GROUP_LIMIT,
};
pub use partition::{
    cycle_partition_weight, max_partition_weight, CyclePartition, PartitionError, MAX_PARTITION_K,
};
pub use types::enumerate_two_factor_types;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("no cubic graph has an odd number of vertices ({0})")]
    OddOrder(usize),
    #[error("n = {0} is too small, at least 4 required")]
    TooSmall(usize),
    #[error("n = {n} exceeds the configured limit {max}")]
    LimitExceeded { n: usize, max: usize },
    #[error("interrupted after {completed} of {total} work units")]
    Interrupted { completed: usize, total: usize },
    #[error("no connected decomposed cubic graph on {0} vertices")]
    NoDecomposition(usize),
    #[error("checkpoint line {line}: {message}")]
    Checkpoint { line: usize, message: String },
    #[error("checkpoint was written for {field} = {found}, this search has {expected}")]
    CheckpointMismatch {
        field: &'static str,
        found: String,
        expected: String,
    },
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
