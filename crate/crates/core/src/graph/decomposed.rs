use std::fmt;

use thiserror::Error;

use super::{Edge, Graph};

/// A violated invariant of a decomposed graph, naming the offending vertex,
/// edge or cycle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("factor cycle {cycle} has length {len}, cycle length ≥ 3 required")]
    ShortFactorCycle { cycle: usize, len: usize },
    #[error("vertex {0} appears more than once in the factor cycles")]
    RepeatedFactorVertex(usize),
    #[error("vertex {0} is not covered by any factor cycle")]
    UncoveredVertex(usize),
    #[error("chord {0} is a self-loop")]
    SelfLoopChord(Edge),
    #[error("chord {0} listed more than once")]
    DuplicateChord(Edge),
    #[error("edge {0} both factor and chord")]
    FactorChordOverlap(Edge),
    #[error("vertex {vertex} has {found} chords, expected {expected}")]
    ChordCount {
        vertex: usize,
        found: usize,
        expected: usize,
    },
    #[error("degree {0} is below 3")]
    DegreeTooSmall(usize),
}

/// The violations found when building a [`DecomposedGraph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct InvalidDecomposition(pub Vec<Violation>);

impl fmt::Display for InvalidDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid decomposition: ")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks the raw parts of a decomposition, inferring the degree as
/// `2 + max chords at any vertex` (never below 3).
pub fn validate(
    n: usize,
    factor_cycles: &[Vec<usize>],
    chords: &[(usize, usize)],
) -> Vec<Violation> {
    let mut counts = vec![0usize; n];
    for &(a, b) in chords {
        if a < n && b < n && a != b {
            counts[a] += 1;
            counts[b] += 1;
        }
    }
    let degree = 2 + counts.iter().copied().max().unwrap_or(0).max(1);
    validate_with_degree(n, factor_cycles, chords, degree)
}

/// Checks the raw parts of a decomposition of a `degree`-regular graph.
pub fn validate_with_degree(
    n: usize,
    factor_cycles: &[Vec<usize>],
    chords: &[(usize, usize)],
    degree: usize,
) -> Vec<Violation> {
    let mut out = Vec::new();
    if degree < 3 {
        out.push(Violation::DegreeTooSmall(degree));
    }

    let mut seen = vec![false; n];
    let mut factor_edges = Vec::new();
    for (ci, cycle) in factor_cycles.iter().enumerate() {
        if cycle.len() < 3 {
            out.push(Violation::ShortFactorCycle {
                cycle: ci,
                len: cycle.len(),
            });
        }
        for &v in cycle {
            if v >= n {
                out.push(Violation::VertexOutOfRange { vertex: v, n });
            } else if seen[v] {
                out.push(Violation::RepeatedFactorVertex(v));
            } else {
                seen[v] = true;
            }
        }
        if cycle.len() >= 3 {
            for i in 0..cycle.len() {
                factor_edges.push(Edge::new(cycle[i], cycle[(i + 1) % cycle.len()]));
            }
        }
    }
    for (v, _) in seen.iter().enumerate().filter(|(_, &s)| !s) {
        out.push(Violation::UncoveredVertex(v));
    }
    factor_edges.sort_unstable();

    let mut counts = vec![0usize; n];
    let mut chord_edges = Vec::new();
    for &(a, b) in chords {
        let e = Edge::new(a, b);
        if a >= n || b >= n {
            out.push(Violation::VertexOutOfRange {
                vertex: a.max(b),
                n,
            });
            continue;
        }
        if a == b {
            out.push(Violation::SelfLoopChord(e));
            continue;
        }
        if factor_edges.binary_search(&e).is_ok() {
            out.push(Violation::FactorChordOverlap(e));
        }
        counts[a] += 1;
        counts[b] += 1;
        chord_edges.push(e);
    }
    chord_edges.sort_unstable();
    for w in chord_edges.windows(2) {
        if w[0] == w[1] {
            out.push(Violation::DuplicateChord(w[0]));
        }
    }
    let expected = degree.saturating_sub(2);
    for (v, &c) in counts.iter().enumerate() {
        if c != expected {
            out.push(Violation::ChordCount {
                vertex: v,
                found: c,
                expected,
            });
        }
    }
    out
}

/// A graph together with a split of its edges into a 2-factor (given as
/// cycles) and chords.
///
/// For cubic graphs the chords form a perfect matching; for a `d`-regular
/// graph every vertex carries `d - 2` chords.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposedGraph {
    graph: Graph,
    factor_cycles: Vec<Vec<usize>>,
    chords: Vec<Edge>,
    is_chord: Vec<bool>,
    degree: usize,
}

impl DecomposedGraph {
    /// Builds and validates a decomposition; the degree is inferred from the
    /// chords (see [`validate`]).
    pub fn new(
        n: usize,
        factor_cycles: Vec<Vec<usize>>,
        chords: Vec<(usize, usize)>,
    ) -> Result<Self, InvalidDecomposition> {
        let violations = validate(n, &factor_cycles, &chords);
        if !violations.is_empty() {
            return Err(InvalidDecomposition(violations));
        }
        Ok(Self::assemble(n, factor_cycles, chords))
    }

    pub fn with_degree(
        n: usize,
        factor_cycles: Vec<Vec<usize>>,
        chords: Vec<(usize, usize)>,
        degree: usize,
    ) -> Result<Self, InvalidDecomposition> {
        let violations = validate_with_degree(n, &factor_cycles, &chords, degree);
        if !violations.is_empty() {
            return Err(InvalidDecomposition(violations));
        }
        Ok(Self::assemble(n, factor_cycles, chords))
    }

    fn assemble(n: usize, factor_cycles: Vec<Vec<usize>>, chords: Vec<(usize, usize)>) -> Self {
        let mut chords: Vec<Edge> = chords.into_iter().map(|(a, b)| Edge::new(a, b)).collect();
        chords.sort_unstable();
        let factor = factor_cycles
            .iter()
            .flat_map(|c| (0..c.len()).map(move |i| (c[i], c[(i + 1) % c.len()])));
        let all = factor.chain(chords.iter().map(|e| (e.0, e.1)));
        let graph = Graph::new(n, all).expect("validated decomposition is a simple graph");
        let is_chord = graph
            .edges()
            .iter()
            .map(|e| chords.binary_search(e).is_ok())
            .collect();
        let degree = graph.regular_degree().unwrap_or(0);
        DecomposedGraph {
            graph,
            factor_cycles,
            chords,
            is_chord,
            degree,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn factor_cycles(&self) -> &[Vec<usize>] {
        &self.factor_cycles
    }

    /// Chords, normalized and sorted.
    pub fn chords(&self) -> &[Edge] {
        &self.chords
    }

    /// Whether the edge with this index (in `graph().edges()`) is a chord.
    pub fn is_chord(&self, edge_index: usize) -> bool {
        self.is_chord[edge_index]
    }

    pub fn chord_mask(&self) -> &[bool] {
        &self.is_chord
    }

    pub fn factor_cycle_lengths(&self) -> Vec<usize> {
        self.factor_cycles.iter().map(Vec::len).collect()
    }

    /// The first factor cycle of minimum length.
    pub fn shortest_factor_cycle(&self) -> &[usize] {
        self.factor_cycles
            .iter()
            .min_by_key(|c| c.len())
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Re-checks every invariant; always empty for values built through the
    /// constructors.
    pub fn validate(&self) -> Vec<Violation> {
        let chords: Vec<_> = self.chords.iter().map(|e| (e.0, e.1)).collect();
        validate_with_degree(self.n(), &self.factor_cycles, &chords, self.degree)
    }

    /// Counts the chords on `cycle`, given as a closed vertex sequence.
    pub fn cycle_chords(&self, cycle: &[usize]) -> Result<usize, CycleError> {
        if cycle.len() < 3 {
            return Err(CycleError::TooShort(cycle.len()));
        }
        let mut seen = vec![false; self.n()];
        let mut chords = 0;
        for (i, &v) in cycle.iter().enumerate() {
            if v >= self.n() {
                return Err(CycleError::NotAnEdge(v, v));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(CycleError::RepeatedVertex(v));
            }
            let w = cycle[(i + 1) % cycle.len()];
            match self.graph.edge_index(v, w) {
                Some(e) => chords += usize::from(self.is_chord[e]),
                None => return Err(CycleError::NotAnEdge(v, w)),
            }
        }
        Ok(chords)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} repeated")]
    RepeatedVertex(usize),
    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> DecomposedGraph {
        DecomposedGraph::new(4, vec![vec![0, 1, 2, 3]], vec![(0, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn k4_is_valid() {
        let dg = k4();
        assert!(dg.validate().is_empty());
        assert!(dg.graph().is_cubic());
        assert_eq!(dg.degree(), 3);
        assert_eq!(dg.chords(), &[Edge(0, 2), Edge(1, 3)]);
        assert_eq!(dg.cycle_chords(&[0, 1, 2]), Ok(1));
        assert_eq!(dg.cycle_chords(&[0, 1, 3, 2]), Ok(2));
        assert_eq!(dg.cycle_chords(&[0, 1, 2, 3]), Ok(0));
        assert_eq!(
            dg.cycle_chords(&[0, 1, 0]),
            Err(CycleError::RepeatedVertex(0))
        );
    }

    #[test]
    fn missing_chords_on_cubic_claim() {
        let report = validate(6, &[vec![0, 1, 2, 3, 4, 5]], &[]);
        assert!(!report.is_empty());
        assert_eq!(report[0].to_string(), "vertex 0 has 0 chords, expected 1");
    }

    #[test]
    fn factor_edge_used_as_chord() {
        let report = validate(3, &[vec![0, 1, 2]], &[(0, 1)]);
        assert!(report.contains(&Violation::FactorChordOverlap(Edge(0, 1))));
        assert!(report
            .iter()
            .any(|v| v.to_string() == "edge {0,1} both factor and chord"));
    }

    #[test]
    fn short_cycles_and_loops() {
        let report = validate(4, &[vec![0, 1], vec![2, 3]], &[(0, 2), (1, 3)]);
        assert!(report[0].to_string().contains("cycle length ≥ 3"));

        let report = validate(4, &[vec![0, 1, 2, 3]], &[(0, 0), (1, 3)]);
        assert!(report.iter().any(|v| v.to_string().contains("self-loop")));
    }

    #[test]
    fn coverage_and_duplicates() {
        let report = validate(5, &[vec![0, 1, 2, 3]], &[(0, 2), (1, 3)]);
        assert!(report.contains(&Violation::UncoveredVertex(4)));
        let report = validate(6, &[vec![0, 1, 2], vec![2, 3, 4, 5]], &[]);
        assert!(report.contains(&Violation::RepeatedFactorVertex(2)));
        let report = validate(4, &[vec![0, 1, 2, 3]], &[(0, 2), (2, 0), (1, 3)]);
        assert!(report.contains(&Violation::DuplicateChord(Edge(0, 2))));
    }

    #[test]
    fn d_regular_with_explicit_degree() {
        // C6 plus chords {0,3},{1,4},{2,5},{0,2}... is not 4-regular
        let report = validate_with_degree(6, &[(0..6).collect()], &[(0, 3), (1, 4), (2, 5)], 4);
        assert_eq!(report.len(), 6);
        // Octahedron-like: C6 + antipodes + {0,2},{2,4},{4,0},{1,3},{3,5},{5,1} would be 5-regular.
        let chords = vec![
            (0, 3),
            (1, 4),
            (2, 5),
            (0, 2),
            (2, 4),
            (4, 0),
            (1, 3),
            (3, 5),
            (5, 1),
        ];
        let dg = DecomposedGraph::new(6, vec![(0..6).collect()], chords).unwrap();
        assert_eq!(dg.degree(), 5);
        assert!(dg.validate().is_empty());
    }
}
