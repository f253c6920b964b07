use thiserror::Error;

use super::maximum_matching;
use crate::graph::{find_bridges, DecomposedGraph, Edge, Graph, InvalidDecomposition, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph has bridge {0}; eliminate bridges first")]
    Bridge(Edge),
    #[error("maximum matching has {found} edges, a perfect matching needs {needed}")]
    NoPerfectMatching { found: usize, needed: usize },
    #[error(transparent)]
    Invalid(#[from] InvalidDecomposition),
}

/// Splits a bridgeless cubic graph into a perfect matching (the chords) and
/// the complementary 2-factor, traced into cycles.
///
/// Cycles are traced from their smallest vertex towards its smaller factor
/// neighbour.
pub fn petersen_decompose(g: &Graph) -> Result<DecomposedGraph, DecomposeError> {
    if !g.is_cubic() {
        return Err(DecomposeError::NotCubic);
    }
    if let Some(&bridge) = find_bridges(g).first() {
        return Err(DecomposeError::Bridge(bridge));
    }
    let matching = maximum_matching(g);
    if 2 * matching.len() != g.n() {
        return Err(DecomposeError::NoPerfectMatching {
            found: matching.len(),
            needed: g.n() / 2,
        });
    }

    decompose_with_matching(g, &matching)
}

/// The decomposition of a cubic graph whose chords are the given perfect
/// matching.
pub fn decompose_with_matching(
    g: &Graph,
    matching: &[Edge],
) -> Result<DecomposedGraph, DecomposeError> {
    if !g.is_cubic() {
        return Err(DecomposeError::NotCubic);
    }
    let mut matching: Vec<Edge> = matching.to_vec();
    matching.sort_unstable();
    let n = g.n();
    let mut factor_adj = vec![Vec::with_capacity(2); n];
    for e in g.edges() {
        if matching.binary_search(e).is_err() {
            factor_adj[e.0].push(e.1);
            factor_adj[e.1].push(e.0);
        }
    }
    if let Some(v) = (0..n).find(|&v| factor_adj[v].len() != 2) {
        let found = matching.iter().filter(|e| e.contains(v)).count();
        return Err(InvalidDecomposition(vec![Violation::ChordCount {
            vertex: v,
            found,
            expected: 1,
        }])
        .into());
    }
    for row in &mut factor_adj {
        row.sort_unstable();
    }

    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let (mut prev, mut cur) = (start, factor_adj[start][0]);
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            let next = if factor_adj[cur][0] == prev {
                factor_adj[cur][1]
            } else {
                factor_adj[cur][0]
            };
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }

    let chords = matching.iter().map(|e| (e.0, e.1)).collect();
    Ok(DecomposedGraph::new(n, cycles, chords)?)
}
