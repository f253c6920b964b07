use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ConstructionError;
use crate::graph::{DecomposedGraph, Edge, Graph};

/// Matching draws before giving up.
pub const MAX_REJECTIONS: usize = 100_000;

const RESTART_AFTER: usize = 1_000;

/// A random `d`-regular decomposed graph: the Hamilton cycle `0..n` as the
/// 2-factor plus `d - 2` perfect matchings, each drawn uniformly and
/// rejected while it hits a factor edge or an earlier chord.
pub fn random_decomposed_regular(
    n: usize,
    d: usize,
    seed: u64,
) -> Result<DecomposedGraph, ConstructionError> {
    if d < 3 {
        return Err(ConstructionError::BadSize {
            n,
            d,
            reason: "degree must be at least 3",
        });
    }
    if n % 2 == 1 || n < d + 1 {
        return Err(ConstructionError::BadSize {
            n,
            d,
            reason: "n must be even and at least d + 1",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let factor_edge = |a: usize, b: usize| (a + 1) % n == b || (b + 1) % n == a;
    let mut chords: Vec<Edge> = Vec::with_capacity(n * (d - 2) / 2);
    let mut vertices: Vec<usize> = (0..n).collect();
    let mut attempts = 0;
    // an early matching can leave no room for later ones, so a stuck draw
    // restarts the whole sample
    let mut stuck = 0;

    while chords.len() < n * (d - 2) / 2 {
        if attempts == MAX_REJECTIONS {
            return Err(ConstructionError::RejectionBudgetExhausted { seed });
        }
        attempts += 1;
        vertices.shuffle(&mut rng);
        let pairs: Vec<Edge> = vertices.chunks(2).map(|p| Edge::new(p[0], p[1])).collect();
        if pairs
            .iter()
            .all(|e| !factor_edge(e.0, e.1) && !chords.contains(e))
        {
            chords.extend(pairs);
            stuck = 0;
        } else {
            stuck += 1;
            if stuck == RESTART_AFTER {
                chords.clear();
                stuck = 0;
            }
        }
    }
    let chords = chords.into_iter().map(|e| (e.0, e.1)).collect();
    Ok(DecomposedGraph::with_degree(
        n,
        vec![(0..n).collect()],
        chords,
        d,
    )?)
}

/// A connected cubic graph with exactly `blocks - 1` bridges.
///
/// Each block is a random Hamiltonian cubic graph on `block_size` vertices
/// with one edge (two for inner blocks) subdivided; the subdivision vertices
/// of consecutive blocks are joined in a chain.
pub fn random_bridged_cubic(
    blocks: usize,
    block_size: usize,
    seed: u64,
) -> Result<Graph, ConstructionError> {
    if blocks < 2 || block_size < 4 || block_size % 2 == 1 {
        return Err(ConstructionError::BadSize {
            n: block_size,
            d: 3,
            reason: "need at least 2 blocks of an even size of at least 4",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut offset = 0;
    let mut previous_port = None;

    for b in 0..blocks {
        let ports = if b == 0 || b + 1 == blocks { 1 } else { 2 };
        let block = random_decomposed_regular(block_size, 3, rng.gen())?;
        let mut block_edges: Vec<Edge> = block.graph().edges().to_vec();
        block_edges.shuffle(&mut rng);
        let (split, kept) = block_edges.split_at(ports);
        edges.extend(kept.iter().map(|e| (offset + e.0, offset + e.1)));

        let mut port_vertices = Vec::with_capacity(ports);
        for (i, e) in split.iter().enumerate() {
            let z = offset + block_size + i;
            edges.push((offset + e.0, z));
            edges.push((offset + e.1, z));
            port_vertices.push(z);
        }
        if let Some(p) = previous_port {
            edges.push((p, port_vertices[0]));
        }
        previous_port = port_vertices.last().copied();
        offset += block_size + ports;
    }
    Ok(Graph::new(offset, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{find_bridges, is_connected};

    #[test]
    fn cubic_instance_is_valid() {
        let dg = random_decomposed_regular(10, 3, 1).unwrap();
        assert!(dg.validate().is_empty());
        assert!(dg.graph().is_cubic());
        assert_eq!(dg, random_decomposed_regular(10, 3, 1).unwrap());
    }

    #[test]
    fn two_chords_per_vertex() {
        for seed in 0..5 {
            let dg = random_decomposed_regular(12, 4, seed).unwrap();
            assert_eq!(dg.graph().regular_degree(), Some(4));
            for v in 0..12 {
                assert_eq!(dg.chords().iter().filter(|e| e.contains(v)).count(), 2);
            }
        }
    }

    #[test]
    fn tight_sizes() {
        // C4 admits only the matching {0,2},{1,3}
        let dg = random_decomposed_regular(4, 3, 9).unwrap();
        assert_eq!(dg.chords(), &[Edge(0, 2), Edge(1, 3)]);
        assert!(random_decomposed_regular(6, 5, 3).is_ok());
    }

    #[test]
    fn bad_sizes() {
        assert!(matches!(
            random_decomposed_regular(9, 3, 0),
            Err(ConstructionError::BadSize { .. })
        ));
        assert!(matches!(
            random_decomposed_regular(4, 4, 0),
            Err(ConstructionError::BadSize { .. })
        ));
        assert!(matches!(
            random_decomposed_regular(8, 2, 0),
            Err(ConstructionError::BadSize { .. })
        ));
    }

    #[test]
    fn bridged_chains() {
        for seed in 0..10 {
            let g = random_bridged_cubic(3, 6, seed).unwrap();
            assert_eq!(g.n(), 3 * 6 + 4);
            assert!(g.is_cubic());
            assert!(is_connected(&g));
            assert_eq!(find_bridges(&g).len(), 2);
        }
    }
}
