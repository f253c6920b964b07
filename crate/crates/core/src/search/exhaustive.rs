//! `gamma_k(n)` by enumerating every decomposed cubic graph on `n` vertices
//! up to the symmetries of its 2-factor.
//!
//! For each cycle type a canonical 2-factor is fixed (cycles on consecutive
//! vertex blocks, longest first) and every perfect matching avoiding its
//! edges is enumerated: smallest unmatched vertex first, partners in
//! increasing order. Work units are (cycle type, chord partner of vertex 0).

use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use std::io::Write as _;

use super::checkpoint::{self, UnitRecord, Units};
use super::{enumerate_two_factor_types, SearchError};
use crate::graph::decomp_format::serialize_decomp;
use crate::graph::{DecomposedGraph, Edge};
use crate::solver::min_chord_cycle;

pub const DEFAULT_MAX_N: usize = 14;

/// Orbit pruning is skipped for cycle types whose 2-factor has more
/// automorphisms than this.
pub const ORBIT_GROUP_LIMIT: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PruneMode {
    /// Every matching.
    None,
    /// Vertex 0's chord partner is restricted to one representative per
    /// orbit of the stabiliser of vertex 0.
    FirstChord,
    /// As `FirstChord`, and a matching is kept only if it is
    /// lexicographically smallest among its images under the whole
    /// automorphism group of the 2-factor.
    #[default]
    Orbit,
}

impl PruneMode {
    pub fn name(self) -> &'static str {
        match self {
            PruneMode::None => "none",
            PruneMode::FirstChord => "first-chord",
            PruneMode::Orbit => "orbit",
        }
    }
}

impl FromStr for PruneMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(PruneMode::None),
            "first-chord" => Ok(PruneMode::FirstChord),
            "orbit" => Ok(PruneMode::Orbit),
            other => Err(format!(
                "unknown prune mode `{other}` (none, first-chord, orbit)"
            )),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub prune: PruneMode,
    /// Worker threads; `None` uses the available parallelism.
    pub threads: Option<usize>,
    pub max_n: usize,
    /// Completed units are appended here and skipped on a rerun.
    pub checkpoint: Option<PathBuf>,
    /// Stop after this many new units (the search then reports
    /// [`SearchError::Interrupted`]).
    pub max_units: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            prune: PruneMode::default(),
            threads: None,
            max_n: DEFAULT_MAX_N,
            checkpoint: None,
            max_units: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub n: usize,
    pub k: usize,
    pub gamma: usize,
    /// Among decompositions attaining `gamma`, the one whose DECOMP text is
    /// lexicographically smallest.
    pub witness: DecomposedGraph,
    pub decompositions_examined: u64,
    pub units: usize,
    /// Units taken from the checkpoint instead of recomputed.
    pub resumed_units: usize,
    pub elapsed: Duration,
}

struct Layout {
    cycles: Vec<Vec<usize>>,
    cycle_of: Vec<usize>,
    position: Vec<usize>,
    /// `None` when the group is too large to enumerate.
    automorphisms: Option<Vec<Vec<usize>>>,
}

impl Layout {
    fn new(lengths: &[usize], prune: PruneMode) -> Self {
        let n: usize = lengths.iter().sum();
        let mut cycles = Vec::with_capacity(lengths.len());
        let mut cycle_of = vec![0; n];
        let mut position = vec![0; n];
        let mut start = 0;
        for (c, &len) in lengths.iter().enumerate() {
            for i in 0..len {
                cycle_of[start + i] = c;
                position[start + i] = i;
            }
            cycles.push((start..start + len).collect());
            start += len;
        }
        let mut layout = Layout {
            cycles,
            cycle_of,
            position,
            automorphisms: None,
        };
        if prune == PruneMode::Orbit {
            layout.automorphisms = layout.enumerate_automorphisms();
        }
        layout
    }

    fn n(&self) -> usize {
        self.cycle_of.len()
    }

    fn is_factor_edge(&self, a: usize, b: usize) -> bool {
        let c = self.cycle_of[a];
        if c != self.cycle_of[b] {
            return false;
        }
        let len = self.cycles[c].len();
        let d = self.position[a].abs_diff(self.position[b]);
        d == 1 || d == len - 1
    }

    fn group_order(&self) -> Option<usize> {
        let mut order = 1usize;
        let mut run = 0;
        for (c, cycle) in self.cycles.iter().enumerate() {
            run = if c > 0 && self.cycles[c - 1].len() == cycle.len() {
                run + 1
            } else {
                1
            };
            order = order.checked_mul(2 * cycle.len())?.checked_mul(run)?;
        }
        Some(order)
    }

    fn enumerate_automorphisms(&self) -> Option<Vec<Vec<usize>>> {
        if self.group_order()? > ORBIT_GROUP_LIMIT {
            return None;
        }
        fn go(
            layout: &Layout,
            c: usize,
            used: &mut [bool],
            perm: &mut [usize],
            out: &mut Vec<Vec<usize>>,
        ) {
            let Some(source) = layout.cycles.get(c) else {
                out.push(perm.to_vec());
                return;
            };
            let len = source.len();
            for t in 0..layout.cycles.len() {
                if used[t] || layout.cycles[t].len() != len {
                    continue;
                }
                used[t] = true;
                for shift in 0..len {
                    for flip in [false, true] {
                        for (i, &v) in source.iter().enumerate() {
                            let j = if flip { (len - i) % len } else { i };
                            perm[v] = layout.cycles[t][(j + shift) % len];
                        }
                        go(layout, c + 1, used, perm, out);
                    }
                }
                used[t] = false;
            }
        }
        let mut out = Vec::new();
        go(
            self,
            0,
            &mut vec![false; self.cycles.len()],
            &mut vec![0; self.n()],
            &mut out,
        );
        Some(out)
    }

    /// Allowed chord partners of vertex 0.
    fn first_partners(&self, prune: PruneMode) -> Vec<usize> {
        if prune == PruneMode::None {
            return (1..self.n())
                .filter(|&w| !self.is_factor_edge(0, w))
                .collect();
        }
        // reflecting the first cycle about 0 maps position p to len - p
        let first_len = self.cycles[0].len();
        let mut out: Vec<usize> = (2..=first_len / 2).map(|p| self.cycles[0][p]).collect();
        // any vertex of another cycle rotates onto its first vertex, and
        // equal-length cycles swap
        for c in 1..self.cycles.len() {
            if c == 1 || self.cycles[c - 1].len() != self.cycles[c].len() {
                out.push(self.cycles[c][0]);
            }
        }
        out
    }

    fn connected(&self, chords: &[Edge]) -> bool {
        let mut parent: Vec<usize> = (0..self.cycles.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut components = self.cycles.len();
        for e in chords {
            let (a, b) = (
                find(&mut parent, self.cycle_of[e.0]),
                find(&mut parent, self.cycle_of[e.1]),
            );
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1
    }

    fn is_orbit_minimum(&self, chords: &[Edge], scratch: &mut Vec<Edge>) -> bool {
        let Some(group) = &self.automorphisms else {
            return true;
        };
        group.iter().all(|perm| {
            scratch.clear();
            scratch.extend(chords.iter().map(|e| Edge::new(perm[e.0], perm[e.1])));
            scratch.sort_unstable();
            scratch.as_slice() >= chords
        })
    }

    fn decomposed(&self, chords: &[Edge]) -> DecomposedGraph {
        DecomposedGraph::new(
            self.n(),
            self.cycles.clone(),
            chords.iter().map(|e| (e.0, e.1)).collect(),
        )
        .expect("enumerated matchings avoid factor edges")
    }
}

fn run_unit(layout: &Layout, partner: usize, k: usize, prune: PruneMode) -> UnitRecord {
    let n = layout.n();
    let mut matched = vec![false; n];
    matched[0] = true;
    matched[partner] = true;
    let mut chords = vec![Edge::new(0, partner)];
    let mut record = UnitRecord {
        examined: 0,
        best: None,
    };
    let mut best_text = String::new();
    let mut scratch = Vec::with_capacity(n / 2);

    fn go(
        layout: &Layout,
        k: usize,
        prune: PruneMode,
        matched: &mut [bool],
        chords: &mut Vec<Edge>,
        record: &mut UnitRecord,
        best_text: &mut String,
        scratch: &mut Vec<Edge>,
    ) {
        let Some(v) = matched.iter().position(|&m| !m) else {
            if !layout.connected(chords) {
                return;
            }
            if prune == PruneMode::Orbit && !layout.is_orbit_minimum(chords, scratch) {
                return;
            }
            record.examined += 1;
            let dg = layout.decomposed(chords);
            let value = min_chord_cycle(&dg, k).length;
            let better = match &record.best {
                None => true,
                Some((g, _)) if value > *g => true,
                Some((g, _)) if value == *g => {
                    let text = serialize_decomp(&dg);
                    if text < *best_text {
                        *best_text = text;
                        record.best = Some((value, chords.clone()));
                    }
                    false
                }
                Some(_) => false,
            };
            if better {
                *best_text = serialize_decomp(&dg);
                record.best = Some((value, chords.clone()));
            }
            return;
        };
        matched[v] = true;
        for w in v + 1..matched.len() {
            if matched[w] || layout.is_factor_edge(v, w) {
                continue;
            }
            matched[w] = true;
            chords.push(Edge(v, w));
            go(
                layout, k, prune, matched, chords, record, best_text, scratch,
            );
            chords.pop();
            matched[w] = false;
        }
        matched[v] = false;
    }

    go(
        layout,
        k,
        prune,
        &mut matched,
        &mut chords,
        &mut record,
        &mut best_text,
        &mut scratch,
    );
    record
}

/// `gamma_k(n)`: the largest value of the shortest cycle with at most `k`
/// chords over all connected decomposed cubic graphs on `n` vertices.
pub fn exhaustive_gamma(
    n: usize,
    k: usize,
    options: &SearchOptions,
) -> Result<SearchResult, SearchError> {
    let started = Instant::now();
    if n % 2 == 1 {
        return Err(SearchError::OddOrder(n));
    }
    if n < 4 {
        return Err(SearchError::TooSmall(n));
    }
    if n > options.max_n {
        return Err(SearchError::LimitExceeded {
            n,
            max: options.max_n,
        });
    }
    let prune = options.prune;
    let layouts: Vec<Layout> = enumerate_two_factor_types(n)
        .iter()
        .map(|lengths| Layout::new(lengths, prune))
        .collect();
    let all_units: Vec<(usize, usize)> = layouts
        .iter()
        .enumerate()
        .flat_map(|(t, layout)| {
            layout
                .first_partners(prune)
                .into_iter()
                .map(move |w| (t, w))
        })
        .collect();

    let mut done: Units = match &options.checkpoint {
        Some(path) if path.exists() && std::fs::metadata(path)?.len() > 0 => {
            checkpoint::load(path, n, k, prune)?
        }
        _ => Units::new(),
    };
    done.retain(|key, _| all_units.contains(key));
    let resumed_units = done.len();
    let writer = match &options.checkpoint {
        Some(path) => Some(Mutex::new(checkpoint::open(path, n, k, prune)?)),
        None => None,
    };

    let pending: Vec<(usize, usize)> = all_units
        .iter()
        .copied()
        .filter(|key| !done.contains_key(key))
        .take(options.max_units.unwrap_or(usize::MAX))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.threads.unwrap_or(0))
        .build()
        .map_err(|e| SearchError::ThreadPool(e.to_string()))?;
    let computed: Vec<Result<((usize, usize), UnitRecord), SearchError>> = pool.install(|| {
        pending
            .par_iter()
            .map(|&(t, w)| {
                let record = run_unit(&layouts[t], w, k, prune);
                if let Some(file) = &writer {
                    let mut file = file.lock().expect("checkpoint writer poisoned");
                    file.write_all(checkpoint::unit_line((t, w), &record).as_bytes())?;
                    file.flush()?;
                }
                Ok(((t, w), record))
            })
            .collect()
    });
    for entry in computed {
        let (key, record) = entry?;
        done.insert(key, record);
    }

    if done.len() < all_units.len() {
        return Err(SearchError::Interrupted {
            completed: done.len(),
            total: all_units.len(),
        });
    }

    let mut examined = 0;
    let mut best: Option<(usize, String, DecomposedGraph)> = None;
    for (&(t, _), record) in &done {
        examined += record.examined;
        let Some((value, chords)) = &record.best else {
            continue;
        };
        if best.as_ref().is_some_and(|(g, _, _)| value < g) {
            continue;
        }
        let dg = layouts[t].decomposed(chords);
        let text = serialize_decomp(&dg);
        let replace = match &best {
            None => true,
            Some((g, best_text, _)) => value > g || text < *best_text,
        };
        if replace {
            best = Some((*value, text, dg));
        }
    }
    let (gamma, _, witness) = best.ok_or(SearchError::NoDecomposition(n))?;
    Ok(SearchResult {
        n,
        k,
        gamma,
        witness,
        decompositions_examined: examined,
        units: all_units.len(),
        resumed_units,
        elapsed: started.elapsed(),
    })
}
