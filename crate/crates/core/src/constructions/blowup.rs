use super::ConstructionError;
use crate::graph::{DecomposedGraph, Graph};

/// Replaces every vertex `v` of a `d`-regular graph by a `2d`-cycle and every
/// edge by two chords joining antipodal port pairs.
///
/// Vertex `v` owns the cycle `2d·v .. 2d·v + 2d - 1`. Its `i`-th incident
/// edge (incidence ordered by neighbour) uses positions `i` and `i + d`, so
/// the edge `{v1, v2}` becomes the chords `(v1:i, v2:j)` and
/// `(v1:i+d, v2:j+d)`. If the base graph has girth `m`, every cycle with at
/// most `m - 1` chords has length at least `2d`.
pub fn blow_up(h: &Graph) -> Result<DecomposedGraph, ConstructionError> {
    let d = h.regular_degree().ok_or(ConstructionError::NotRegular)?;
    if d < 2 {
        return Err(ConstructionError::DegreeTooSmall(d));
    }
    let size = 2 * d;
    let vertex = |v: usize, pos: usize| v * size + pos;

    let cycles = (0..h.n())
        .map(|v| (0..size).map(|pos| vertex(v, pos)).collect())
        .collect();
    let port = |v: usize, w: usize| {
        h.incident(v)
            .iter()
            .position(|&(x, _)| x == w)
            .expect("edge endpoints are adjacent")
    };
    let mut chords = Vec::with_capacity(2 * h.m());
    for e in h.edges() {
        let (i, j) = (port(e.0, e.1), port(e.1, e.0));
        chords.push((vertex(e.0, i), vertex(e.1, j)));
        chords.push((vertex(e.0, i + d), vertex(e.1, j + d)));
    }
    Ok(DecomposedGraph::new(h.n() * size, cycles, chords)?)
}
