use thiserror::Error;

use crate::graph::{find_bridges, girth, is_connected, Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewireError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not connected")]
    NotConnected,
    #[error("every rewiring of bridge {0} would create a parallel edge")]
    NoAdmissiblePair(Edge),
    #[error("rewiring bridge {bridge} left {after} bridges (was {before})")]
    BridgeCountNotDecreased {
        bridge: Edge,
        before: usize,
        after: usize,
    },
    #[error("girth dropped from {before} to {after}")]
    GirthDecreased { before: usize, after: usize },
}

/// One rewiring: the bridge `xy` and the edges `xx'`, `yy'` were replaced by
/// `xy'`, `yx'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewireStep {
    pub bridge: Edge,
    pub removed: [Edge; 2],
    pub added: [Edge; 2],
}

/// Repeatedly rewires the smallest bridge until the graph is bridgeless.
pub fn eliminate_bridges(g: &Graph) -> Result<Graph, RewireError> {
    eliminate_bridges_traced(g).map(|(out, _)| out)
}

/// Like [`eliminate_bridges`], also returning the steps taken.
///
/// For the bridge `xy` (`x < y`) the pairs `x' ∈ N(x) \ {y}`,
/// `y' ∈ N(y) \ {x}` are tried in increasing order and the first one that
/// keeps the graph simple and connected is applied. Every step is checked to
/// strictly reduce the bridge count, and the final girth is checked against
/// the input's.
pub fn eliminate_bridges_traced(g: &Graph) -> Result<(Graph, Vec<RewireStep>), RewireError> {
    if !g.is_cubic() {
        return Err(RewireError::NotCubic);
    }
    if !is_connected(g) {
        return Err(RewireError::NotConnected);
    }
    let girth_before = girth(g);
    let mut current = g.clone();
    let mut bridges = find_bridges(&current);
    let mut steps = Vec::new();

    while let Some(&bridge) = bridges.first() {
        let (next, step) = rewire_once(&current, bridge)?;
        let after = find_bridges(&next);
        if after.len() >= bridges.len() {
            return Err(RewireError::BridgeCountNotDecreased {
                bridge,
                before: bridges.len(),
                after: after.len(),
            });
        }
        current = next;
        bridges = after;
        steps.push(step);
    }

    // A cubic graph always has a cycle, so both girths are finite.
    let (before, after) = (girth_before.unwrap_or(0), girth(&current).unwrap_or(0));
    if after < before {
        return Err(RewireError::GirthDecreased { before, after });
    }
    Ok((current, steps))
}

fn rewire_once(g: &Graph, bridge: Edge) -> Result<(Graph, RewireStep), RewireError> {
    let Edge(x, y) = bridge;
    for x2 in g.neighbors(x).filter(|&v| v != y) {
        for y2 in g.neighbors(y).filter(|&v| v != x) {
            if x2 == y2 || g.has_edge(x, y2) || g.has_edge(y, x2) {
                continue;
            }
            let removed = [Edge::new(x, x2), Edge::new(y, y2)];
            let added = [Edge::new(x, y2), Edge::new(y, x2)];
            let next = g
                .rewired(&removed, &added)
                .expect("admissible pair keeps the graph simple");
            if is_connected(&next) {
                return Ok((
                    next,
                    RewireStep {
                        bridge,
                        removed,
                        added,
                    },
                ));
            }
        }
    }
    Err(RewireError::NoAdmissiblePair(bridge))
}
