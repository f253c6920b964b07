use thiserror::Error;

use super::Graph;

pub const MAX_ISO_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("isomorphism check supports at most {MAX_ISO_VERTICES} vertices, got {0}")]
    TooLarge(usize),
}

const UNREACHABLE: u8 = u8::MAX;

struct Profile {
    dist: Vec<Vec<u8>>,
    /// degree followed by the distance histogram of each vertex
    invariant: Vec<Vec<usize>>,
}

impl Profile {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = vec![vec![UNREACHABLE; n]; n];
        let mut queue = Vec::with_capacity(n);
        for (s, row) in dist.iter_mut().enumerate() {
            row[s] = 0;
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                for w in g.neighbors(u) {
                    if row[w] == UNREACHABLE {
                        row[w] = row[u] + 1;
                        queue.push(w);
                    }
                }
            }
        }
        let invariant = (0..n)
            .map(|v| {
                let mut inv = vec![0; n + 2];
                inv[0] = g.degree(v);
                for &d in &dist[v] {
                    let slot = if d == UNREACHABLE {
                        n + 1
                    } else {
                        d as usize + 1
                    };
                    inv[slot] += 1;
                }
                inv
            })
            .collect();
        Profile { dist, invariant }
    }
}

/// True iff an edge-preserving bijection between the vertex sets exists.
///
/// Bounded backtracking: candidates must agree on degree and distance
/// histogram, and on the distance to every vertex mapped so far.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, IsoError> {
    for g in [g1, g2] {
        if g.n() > MAX_ISO_VERTICES {
            return Err(IsoError::TooLarge(g.n()));
        }
    }
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return Ok(false);
    }
    let n = g1.n();
    let (p1, p2) = (Profile::new(g1), Profile::new(g2));

    let mut inv1 = p1.invariant.clone();
    let mut inv2 = p2.invariant.clone();
    inv1.sort();
    inv2.sort();
    if inv1 != inv2 {
        return Ok(false);
    }

    // Visit g1 in BFS order so each vertex after the first in its component
    // has an already mapped neighbour.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for s in 0..n {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let start = order.len();
        order.push(s);
        let mut head = start;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for w in g1.neighbors(u) {
                if !placed[w] {
                    placed[w] = true;
                    order.push(w);
                }
            }
        }
    }

    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend(0, &order, &p1, &p2, &mut image, &mut used))
}

fn extend(
    depth: usize,
    order: &[usize],
    p1: &Profile,
    p2: &Profile,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for c in 0..image.len() {
        if used[c] || p1.invariant[v] != p2.invariant[c] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| p1.dist[v][u] == p2.dist[c][image[u]]);
        if !consistent {
            continue;
        }
        image[v] = c;
        used[c] = true;
        if extend(depth + 1, order, p1, p2, image, used) {
            return true;
        }
        used[c] = false;
        image[v] = usize::MAX;
    }
    false
}
