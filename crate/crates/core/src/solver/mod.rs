//! Exact shortest cycle using at most `k` chords.
//!
//! For every edge `e = uv` a breadth-first search runs from `u` to `v` in the
//! graph minus `e`, over states `(vertex, chords used)`. The best
//! `distance + 1` over all edges is the answer: an optimal cycle through `e`
//! is such a path plus `e`, and every closed walk found this way contains a
//! simple cycle that is no longer and stays within the budget.

mod oracle;
mod walk;

use serde::Serialize;
use thiserror::Error;

use crate::graph::DecomposedGraph;

pub use oracle::{
    bounded_min_chord_cycle, oracle_min_chord_cycle, oracle_min_chord_cycle_all_k,
    ORACLE_MAX_VERTICES,
};
pub use walk::{canonical_cycle, split_closed_walk};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("exhaustive cycle enumeration is limited to {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },
}

/// A shortest cycle within a chord budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChordCycleResult {
    pub length: usize,
    /// The cycle as a vertex sequence, starting at its smallest vertex.
    pub witness: Vec<usize>,
    pub chords_used: usize,
    pub budget: usize,
}

impl ChordCycleResult {
    /// Checks the witness against `dg`: a simple cycle of the reported
    /// length and chord count, within budget.
    pub fn check(&self, dg: &DecomposedGraph) -> Result<(), String> {
        let chords = dg.cycle_chords(&self.witness).map_err(|e| e.to_string())?;
        if self.witness.len() != self.length {
            return Err(format!(
                "witness has {} vertices, reported length {}",
                self.witness.len(),
                self.length
            ));
        }
        if chords != self.chords_used {
            return Err(format!(
                "witness has {chords} chords, reported {}",
                self.chords_used
            ));
        }
        if chords > self.budget {
            return Err(format!(
                "witness uses {chords} chords, budget {}",
                self.budget
            ));
        }
        Ok(())
    }
}

/// The shortest cycle of `dg` with at most `budget` chords.
pub fn min_chord_cycle(dg: &DecomposedGraph, budget: usize) -> ChordCycleResult {
    search(dg, budget, budget)
        .pop()
        .expect("one budget requested")
}

/// Results for every budget `0..=k_max` from one shared search; lengths are
/// non-increasing in the budget.
pub fn min_chord_cycle_all_k(dg: &DecomposedGraph, k_max: usize) -> Vec<ChordCycleResult> {
    search(dg, 0, k_max)
}

struct Best {
    length: usize,
    witness: Vec<usize>,
}

fn search(dg: &DecomposedGraph, k_min: usize, k_max: usize) -> Vec<ChordCycleResult> {
    let g = dg.graph();
    let n = g.n();
    let chord = dg.chord_mask();
    let layers = k_max + 1;
    // Factor cycles are chordless, so the shortest one bounds every budget.
    let factor_bound = dg.shortest_factor_cycle().len();
    assert!(factor_bound >= 3, "decomposed graph has a factor cycle");

    let mut best: Vec<Option<Best>> = (k_min..=k_max).map(|_| None).collect();
    let mut dist = vec![usize::MAX; n * layers];
    let mut parent = vec![usize::MAX; n * layers];
    let mut queue = Vec::with_capacity(n * layers);

    for (ei, e) in g.edges().iter().enumerate() {
        let cost = usize::from(chord[ei]);
        if cost > k_max {
            continue;
        }
        // largest path distance that could still improve some budget
        let limit = (k_min.max(cost)..=k_max)
            .map(|k| match &best[k - k_min] {
                Some(b) => b.length.saturating_sub(2),
                None => factor_bound - 1,
            })
            .max()
            .unwrap_or(0);
        if limit < 2 {
            continue;
        }
        let path_layers = layers - cost;
        let (source, target) = (e.0, e.1);

        dist.fill(usize::MAX);
        queue.clear();
        dist[source] = 0;
        queue.push(source);
        let mut head = 0;
        while head < queue.len() {
            let state = queue[head];
            head += 1;
            let (u, used) = (state % n, state / n);
            let d = dist[state];
            if d == limit || u == target {
                continue;
            }
            for &(w, f) in g.incident(u) {
                if f == ei {
                    continue;
                }
                let next_used = used + usize::from(chord[f]);
                if next_used >= path_layers {
                    continue;
                }
                let next = next_used * n + w;
                if dist[next] == usize::MAX {
                    dist[next] = d + 1;
                    parent[next] = state;
                    queue.push(next);
                }
            }
        }

        for k in k_min.max(cost)..=k_max {
            let path_budget = k - cost;
            let Some((d, used)) = (0..=path_budget)
                .filter_map(|c| {
                    let d = dist[c * n + target];
                    (d != usize::MAX).then_some((d, c))
                })
                .min()
            else {
                continue;
            };
            let improves = match &best[k - k_min] {
                Some(b) => d + 1 < b.length,
                None => d < factor_bound,
            };
            if !improves {
                continue;
            }
            let mut walk = Vec::with_capacity(d + 1);
            let mut state = used * n + target;
            walk.push(target);
            while state != source {
                state = parent[state];
                walk.push(state % n);
            }
            walk.reverse();
            let cycle = walk::shortest_fragment_within(dg, &walk, k)
                .expect("closed walk within budget contains a cycle within budget");
            debug_assert!(cycle.len() <= d + 1);
            best[k - k_min] = Some(Best {
                length: cycle.len(),
                witness: cycle,
            });
        }
    }

    best.into_iter()
        .zip(k_min..=k_max)
        .map(|(b, budget)| {
            let b = b.expect("a factor cycle is within every budget");
            let witness = canonical_cycle(&b.witness);
            let chords_used = dg.cycle_chords(&witness).expect("witness is a cycle");
            let result = ChordCycleResult {
                length: b.length,
                witness,
                chords_used,
                budget,
            };
            debug_assert_eq!(result.check(dg), Ok(()));
            result
        })
        .collect()
}
