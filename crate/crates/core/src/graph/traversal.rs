use std::collections::VecDeque;

use super::{Edge, Graph};

/// Length of a shortest cycle, or `None` when the graph is a forest.
///
/// Runs a breadth-first search from every vertex; a non-tree edge `uw` seen
/// from root `r` closes a walk of length `dist(u) + dist(w) + 1`, and the
/// minimum over all roots is exact.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent_edge = vec![usize::MAX; n];
    let mut queue = VecDeque::new();

    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            // every cycle closed from here is at least 2 * dist(u) long
            if 2 * dist[u] >= best {
                break;
            }
            for &(w, e) in g.incident(u) {
                if e == parent_edge[u] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent_edge[w] = e;
                    queue.push_back(w);
                } else {
                    best = best.min(dist[u] + dist[w] + 1);
                    if 2 * dist[u] >= best {
                        break 'bfs;
                    }
                }
            }
        }
        parent_edge[root] = usize::MAX;
    }
    (best != usize::MAX).then_some(best)
}

/// All cut edges, sorted, from one iterative depth-first traversal with
/// low-point values.
pub fn find_bridges(g: &Graph) -> Vec<Edge> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut bridges = Vec::new();
    let mut time = 0;
    // (vertex, edge used to enter it, next incidence position)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for start in 0..n {
        if disc[start] != usize::MAX {
            continue;
        }
        disc[start] = time;
        low[start] = time;
        time += 1;
        stack.push((start, usize::MAX, 0));

        while let Some(top) = stack.last_mut() {
            let (u, in_edge, pos) = *top;
            if let Some(&(w, e)) = g.incident(u).get(pos) {
                top.2 += 1;
                if e == in_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, e, 0));
                } else {
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        bridges.push(g.edge(in_edge));
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

/// True iff a single traversal from vertex 0 reaches every vertex.
pub fn is_connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0];
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for w in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    fn brute_force_bridges(g: &Graph) -> Vec<Edge> {
        let components = |h: &Graph| {
            let mut seen = vec![false; h.n()];
            let mut count = 0;
            for s in 0..h.n() {
                if seen[s] {
                    continue;
                }
                count += 1;
                seen[s] = true;
                let mut stack = vec![s];
                while let Some(u) = stack.pop() {
                    for w in h.neighbors(u) {
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
            }
            count
        };
        let base = components(g);
        g.edges()
            .iter()
            .copied()
            .filter(|&e| components(&g.rewired(&[e], &[]).unwrap()) > base)
            .collect()
    }

    /// Two copies of K4 with one edge subdivided, joined at the subdivision
    /// vertices: the smallest cubic graph with a bridge.
    fn bridged_ten() -> Graph {
        let block = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 3), (3, 4)];
        let edges = block
            .iter()
            .copied()
            .chain(block.iter().map(|&(a, b)| (a + 5, b + 5)))
            .chain([(4, 9)]);
        Graph::new(10, edges).unwrap()
    }

    #[test]
    fn girth_of_reference_graphs() {
        assert_eq!(girth(&data::heawood()), Some(6));
        assert_eq!(girth(&data::petersen()), Some(5));
        assert_eq!(girth(&data::tutte_coxeter()), Some(8));
        assert_eq!(girth(&Graph::cycle(7).unwrap()), Some(7));
    }

    #[test]
    fn girth_of_forest_is_none() {
        let tree = Graph::new(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(girth(&tree), None);
        assert_eq!(girth(&Graph::empty(3)), None);
    }

    #[test]
    fn bridges_examples() {
        assert!(find_bridges(&data::petersen()).is_empty());
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(find_bridges(&p3), vec![Edge(0, 1), Edge(1, 2)]);
        let g = bridged_ten();
        assert!(g.is_cubic());
        assert_eq!(find_bridges(&g), brute_force_bridges(&g));
        assert_eq!(find_bridges(&g), vec![Edge(4, 9)]);
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&data::petersen()));
        let two_triangles =
            Graph::new(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!is_connected(&two_triangles));
        assert!(is_connected(&Graph::empty(1)));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..=16).prop_flat_map(|n| {
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                    .collect();
                let len = pairs.len();
                proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
                    let edges = pairs
                        .iter()
                        .zip(&mask)
                        .filter(|(_, &keep)| keep)
                        .map(|(&e, _)| e);
                    Graph::new(n, edges).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn bridges_match_brute_force(g in arb_graph()) {
                prop_assert_eq!(find_bridges(&g), brute_force_bridges(&g));
            }
        }
    }
}
