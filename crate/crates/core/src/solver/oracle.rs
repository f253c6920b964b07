//! Brute-force cycle enumeration, used to cross-check the solver.

use super::{canonical_cycle, ChordCycleResult, SolveError};
use crate::graph::DecomposedGraph;

pub const ORACLE_MAX_VERTICES: usize = 20;

/// Enumerates every simple cycle of length at most `max_len`, each rooted at
/// its smallest vertex (and reported once per direction), calling
/// `visit(cycle, chords)`.
fn for_each_cycle(dg: &DecomposedGraph, max_len: usize, mut visit: impl FnMut(&[usize], usize)) {
    let g = dg.graph();
    let n = g.n();
    let mut on_path = vec![false; n];
    let mut path = Vec::new();

    fn extend(
        dg: &DecomposedGraph,
        root: usize,
        max_len: usize,
        chords: usize,
        on_path: &mut [bool],
        path: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize], usize),
    ) {
        let g = dg.graph();
        let u = *path.last().expect("path starts at the root");
        for &(w, e) in g.incident(u) {
            let c = chords + usize::from(dg.is_chord(e));
            if w == root {
                if path.len() >= 3 {
                    visit(path, c);
                }
            } else if w > root && !on_path[w] && path.len() < max_len {
                on_path[w] = true;
                path.push(w);
                extend(dg, root, max_len, c, on_path, path, visit);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    for root in 0..n {
        on_path[root] = true;
        path.clear();
        path.push(root);
        extend(dg, root, max_len, 0, &mut on_path, &mut path, &mut visit);
        on_path[root] = false;
    }
}

fn collect_best(
    dg: &DecomposedGraph,
    k_max: usize,
    max_len: usize,
) -> Vec<Option<(usize, Vec<usize>, usize)>> {
    // best[c]: shortest cycle with exactly c chords (c > k_max folded into nothing)
    let mut by_chords: Vec<Option<(usize, Vec<usize>)>> = vec![None; k_max + 1];
    for_each_cycle(dg, max_len, |cycle, chords| {
        if chords > k_max {
            return;
        }
        let slot = &mut by_chords[chords];
        let better = match slot {
            Some((len, w)) => {
                cycle.len() < *len || (cycle.len() == *len && canonical_cycle(cycle) < *w)
            }
            None => true,
        };
        if better {
            *slot = Some((cycle.len(), canonical_cycle(cycle)));
        }
    });

    let mut out = Vec::with_capacity(k_max + 1);
    let mut running: Option<(usize, Vec<usize>, usize)> = None;
    for (c, entry) in by_chords.into_iter().enumerate() {
        if let Some((len, w)) = entry {
            if running.as_ref().is_none_or(|(l, _, _)| len < *l) {
                running = Some((len, w, c));
            }
        }
        out.push(running.clone());
    }
    out
}

fn to_result(entry: (usize, Vec<usize>, usize), budget: usize) -> ChordCycleResult {
    let (length, witness, chords_used) = entry;
    ChordCycleResult {
        length,
        witness,
        chords_used,
        budget,
    }
}

/// Same contract as [`super::min_chord_cycle`], by enumerating every simple
/// cycle.
pub fn oracle_min_chord_cycle(
    dg: &DecomposedGraph,
    budget: usize,
) -> Result<ChordCycleResult, SolveError> {
    oracle_min_chord_cycle_all_k(dg, budget).map(|mut all| all.pop().expect("budget 0..=k"))
}

pub fn oracle_min_chord_cycle_all_k(
    dg: &DecomposedGraph,
    k_max: usize,
) -> Result<Vec<ChordCycleResult>, SolveError> {
    if dg.n() > ORACLE_MAX_VERTICES {
        return Err(SolveError::TooLarge {
            n: dg.n(),
            limit: ORACLE_MAX_VERTICES,
        });
    }
    Ok(collect_best(dg, k_max, dg.n())
        .into_iter()
        .enumerate()
        .map(|(k, e)| to_result(e.expect("factor cycles are chordless"), k))
        .collect())
}

/// The shortest cycle of length at most `max_len` with at most `budget`
/// chords, by enumerating only cycles up to that length. No vertex limit:
/// the work is polynomial in `n` for a fixed `max_len`.
pub fn bounded_min_chord_cycle(
    dg: &DecomposedGraph,
    budget: usize,
    max_len: usize,
) -> Option<ChordCycleResult> {
    collect_best(dg, budget, max_len)
        .pop()
        .flatten()
        .map(|e| to_result(e, budget))
}
