//! Simple undirected graphs, Petersen decompositions and the basic algorithms
//! used throughout the crate (girth, bridges, connectivity, isomorphism),
//! together with the DECOMP and graph6 file formats.

pub mod decomp_format;
mod decomposed;
pub mod graph6;
mod iso;
mod traversal;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use decomposed::{
    validate, validate_with_degree, CycleError, DecomposedGraph, InvalidDecomposition, Violation,
};
pub use iso::{is_isomorphic, IsoError, MAX_ISO_VERTICES};
pub use traversal::{find_bridges, girth, is_connected};

/// An undirected edge, always stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    /// The endpoint opposite to `v`.
    pub fn other(self, v: usize) -> usize {
        debug_assert!(v == self.0 || v == self.1);
        if v == self.0 {
            self.1
        } else {
            self.0
        }
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {0}")]
    ParallelEdge(Edge),
}

/// A simple undirected graph on the vertices `0..n`.
///
/// Edges are kept sorted, and every vertex carries its incidence list as
/// `(neighbor, edge index)` pairs sorted by neighbor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            list.push(Edge::new(a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::ParallelEdge(w[0]));
        }

        let mut adj = vec![Vec::new(); n];
        for (i, e) in list.iter().enumerate() {
            adj[e.0].push((e.1, i));
            adj[e.1].push((e.0, i));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
        })
    }

    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    /// `(neighbor, edge index)` pairs of `v`, sorted by neighbor.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let row = self.adj.get(u)?;
        row.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| row[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// The common degree if the graph is regular (`None` for the empty vertex set).
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|row| row.len() == d).then_some(d)
    }

    pub fn is_cubic(&self) -> bool {
        self.regular_degree() == Some(3)
    }

    /// A copy with `remove` deleted and `add` inserted.
    pub fn rewired(&self, remove: &[Edge], add: &[Edge]) -> Result<Self, GraphError> {
        let kept = self
            .edges
            .iter()
            .filter(|e| !remove.contains(e))
            .chain(add.iter())
            .map(|e| (e.0, e.1));
        Graph::new(self.n, kept)
    }

    /// Renumbers vertices: vertex `v` becomes `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self, GraphError> {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        Graph::new(self.n, self.edges.iter().map(|e| (perm[e.0], perm[e.1])))
    }
}
