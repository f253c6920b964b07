use crate::graph::{Edge, Graph};

const NONE: usize = usize::MAX;

/// Maximum-cardinality matching by augmenting paths with blossom
/// contraction (Edmonds). Roots are tried in increasing vertex order and
/// neighbours in increasing order, so the output is deterministic.
pub fn maximum_matching(g: &Graph) -> Vec<Edge> {
    let mut search = BlossomSearch::new(g);
    for root in 0..g.n() {
        if search.mate[root] == NONE {
            if let Some(end) = search.find_augmenting_path(root) {
                search.augment(end);
            }
        }
    }
    let mut out: Vec<Edge> = (0..g.n())
        .filter(|&v| search.mate[v] != NONE && v < search.mate[v])
        .map(|v| Edge(v, search.mate[v]))
        .collect();
    out.sort_unstable();
    out
}

struct BlossomSearch<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> BlossomSearch<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        BlossomSearch {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, blossom_base: usize, mut child: usize) {
        while self.base[v] != blossom_base {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex ending
    /// an augmenting path.
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);

        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for &(to, _) in self.g.incident(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract the blossom
                    let blossom_base = self.lowest_common_base(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, blossom_base, to);
                    self.mark_path(to, blossom_base, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = blossom_base;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    fn brute_force_size(g: &Graph) -> usize {
        fn go(g: &Graph, v: usize, taken: &mut [bool]) -> usize {
            let Some(v) = (v..g.n()).find(|&u| !taken[u]) else {
                return 0;
            };
            taken[v] = true;
            let mut best = go(g, v + 1, taken);
            for w in g.neighbors(v) {
                if !taken[w] {
                    taken[w] = true;
                    best = best.max(1 + go(g, v + 1, taken));
                    taken[w] = false;
                }
            }
            taken[v] = false;
            best
        }
        go(g, 0, &mut vec![false; g.n()])
    }

    fn assert_is_matching(g: &Graph, m: &[Edge]) {
        let mut hit = vec![false; g.n()];
        for e in m {
            assert!(g.has_edge(e.0, e.1));
            assert!(!std::mem::replace(&mut hit[e.0], true));
            assert!(!std::mem::replace(&mut hit[e.1], true));
        }
    }

    #[test]
    fn small_examples() {
        let petersen = data::petersen();
        let m = maximum_matching(&petersen);
        assert_is_matching(&petersen, &m);
        assert_eq!(m.len(), 5);
        assert_eq!(brute_force_size(&petersen), 5);

        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(maximum_matching(&k4).len(), 2);

        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(maximum_matching(&star).len(), 1);
    }

    #[test]
    fn needs_blossom_contraction() {
        // triangle 0-1-2 with pendant paths; greedy from 0 would block
        let g = Graph::new(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 3);
        // two pentagons joined by a bridge
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 1) % 5)));
        edges.push((0, 5));
        let g = Graph::new(10, edges).unwrap();
        assert_eq!(maximum_matching(&g).len(), 5);
    }

    #[test]
    fn deterministic() {
        let g = data::heawood();
        assert_eq!(maximum_matching(&g), maximum_matching(&g));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(200))]
            #[test]
            fn matches_brute_force(n in 1usize..=14, density in 1u32..6, seed in any::<u64>()) {
                let mut state = seed | 1;
                let mut edges = Vec::new();
                for a in 0..n {
                    for b in a + 1..n {
                        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        if (state >> 33) % 10 < u64::from(density) {
                            edges.push((a, b));
                        }
                    }
                }
                let g = Graph::new(n, edges).unwrap();
                let m = maximum_matching(&g);
                assert_is_matching(&g, &m);
                prop_assert_eq!(m.len(), brute_force_size(&g));
            }
        }
    }
}
