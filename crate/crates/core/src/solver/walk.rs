use crate::graph::DecomposedGraph;

/// Splits a closed walk (last vertex adjacent to the first) into simple
/// cycles: cut at the first repeated vertex and recurse on both fragments.
/// Fragments shorter than three vertices are back-and-forth traversals and
/// are dropped.
pub fn split_closed_walk(walk: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut pending = vec![walk.to_vec()];
    while let Some(w) = pending.pop() {
        match first_repeat(&w) {
            Some((i, j)) => {
                let inner = w[i..j].to_vec();
                let mut outer = w[..i].to_vec();
                outer.extend_from_slice(&w[j..]);
                pending.push(outer);
                pending.push(inner);
            }
            None if w.len() >= 3 => out.push(w),
            None => {}
        }
    }
    out
}

fn first_repeat(w: &[usize]) -> Option<(usize, usize)> {
    for j in 1..w.len() {
        if let Some(i) = w[..j].iter().position(|&v| v == w[j]) {
            return Some((i, j));
        }
    }
    None
}

/// The shortest simple cycle of `walk` whose chord count is within `budget`
/// (first one on ties).
pub(crate) fn shortest_fragment_within(
    dg: &DecomposedGraph,
    walk: &[usize],
    budget: usize,
) -> Option<Vec<usize>> {
    split_closed_walk(walk)
        .into_iter()
        .filter(|c| dg.cycle_chords(c).is_ok_and(|chords| chords <= budget))
        .min_by_key(Vec::len)
}

/// Rotates a cycle to start at its smallest vertex and orients it towards
/// the smaller of that vertex's two cycle neighbours.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    let Some(start) = (0..len).min_by_key(|&i| cycle[i]) else {
        return Vec::new();
    };
    let forward = cycle[(start + 1) % len];
    let backward = cycle[(start + len - 1) % len];
    if forward <= backward {
        (0..len).map(|i| cycle[(start + i) % len]).collect()
    } else {
        (0..len).map(|i| cycle[(start + len - i) % len]).collect()
    }
}
