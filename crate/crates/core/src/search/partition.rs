//! Partitions of `{1..k}` into cyclically ordered parts and their weight.

use thiserror::Error;

/// Largest `k` that [`max_partition_weight`] will brute-force.
pub const MAX_PARTITION_K: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("k must be even and positive, got {0}")]
    OddOrZero(usize),
    #[error("k = {k} is above the brute-force limit {MAX_PARTITION_K}")]
    TooLarge { k: usize },
    #[error("part {0} has fewer than 2 elements")]
    ShortPart(usize),
    #[error("element {0} is outside 1..=k")]
    OutOfRange(usize),
    #[error("element {0} appears more than once")]
    Repeated(usize),
    #[error("element {0} is not covered")]
    Uncovered(usize),
}

/// A partition of `{1..k}` into cycles. Each part is a cyclic sequence;
/// rotations and reflections of a part describe the same cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePartition {
    k: usize,
    parts: Vec<Vec<usize>>,
}

impl CyclePartition {
    pub fn new(k: usize, parts: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        if k == 0 || k % 2 == 1 {
            return Err(PartitionError::OddOrZero(k));
        }
        let mut seen = vec![false; k + 1];
        for (i, part) in parts.iter().enumerate() {
            if part.len() < 2 {
                return Err(PartitionError::ShortPart(i));
            }
            for &a in part {
                if a == 0 || a > k {
                    return Err(PartitionError::OutOfRange(a));
                }
                if std::mem::replace(&mut seen[a], true) {
                    return Err(PartitionError::Repeated(a));
                }
            }
        }
        if let Some(a) = (1..=k).find(|&a| !seen[a]) {
            return Err(PartitionError::Uncovered(a));
        }
        Ok(CyclePartition { k, parts })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }
}

fn cycle_weight(part: &[usize]) -> usize {
    // a 2-element part has its single pair adjacent "both ways round" and so
    // contributes twice
    (0..part.len())
        .map(|i| part[i].abs_diff(part[(i + 1) % part.len()]))
        .sum()
}

/// Sum over parts of `|a - b|` over cyclically adjacent pairs.
pub fn cycle_partition_weight(p: &CyclePartition) -> usize {
    p.parts.iter().map(|part| cycle_weight(part)).sum()
}

/// The maximum of [`cycle_partition_weight`] over all cycle partitions of
/// `{1..k}`.
///
/// For each subset the heaviest cyclic order is found by a Held–Karp style
/// DP, then subsets are combined by a second DP over set partitions.
pub fn max_partition_weight(k: usize) -> Result<usize, PartitionError> {
    if k == 0 || k % 2 == 1 {
        return Err(PartitionError::OddOrZero(k));
    }
    if k > MAX_PARTITION_K {
        return Err(PartitionError::TooLarge { k });
    }
    let full = (1usize << k) - 1;
    let value = |i: usize| i + 1;

    // heaviest Hamilton cycle on each subset of size >= 2
    let mut cycle = vec![0usize; full + 1];
    for (mask, slot) in cycle.iter_mut().enumerate() {
        if mask.count_ones() < 2 {
            continue;
        }
        let start = mask.trailing_zeros() as usize;
        // path[sub][last]: heaviest path from start through sub ending at last
        let mut path = vec![vec![None::<usize>; k]; full + 1];
        path[1 << start][start] = Some(0);
        let mut sub = mask;
        let mut subs = Vec::new();
        loop {
            if sub & (1 << start) != 0 {
                subs.push(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
        subs.sort_by_key(|s| s.count_ones());
        let mut best = 0;
        for &s in &subs {
            for last in 0..k {
                let Some(w) = path[s][last] else { continue };
                if s == mask {
                    best = best.max(w + value(last).abs_diff(value(start)));
                    continue;
                }
                for next in 0..k {
                    if mask & (1 << next) != 0 && s & (1 << next) == 0 {
                        let t = s | 1 << next;
                        let cand = w + value(last).abs_diff(value(next));
                        if path[t][next].is_none_or(|old| cand > old) {
                            path[t][next] = Some(cand);
                        }
                    }
                }
            }
        }
        *slot = best;
    }

    let mut part = vec![None::<usize>; full + 1];
    part[0] = Some(0);
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let block = sub | low;
            if block.count_ones() >= 2 {
                if let Some(w) = part[mask ^ block] {
                    let cand = w + cycle[block];
                    if part[mask].is_none_or(|old| cand > old) {
                        part[mask] = Some(cand);
                    }
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    Ok(part[full].expect("an even set splits into pairs"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        let p = CyclePartition::new(4, vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(cycle_partition_weight(&p), 8);
        let p = CyclePartition::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(cycle_partition_weight(&p), 6);
        let p = CyclePartition::new(2, vec![vec![1, 2]]).unwrap();
        assert_eq!(cycle_partition_weight(&p), 2);
    }

    #[test]
    fn antipodal_pairs_reach_the_maximum() {
        for k in (2..=20).step_by(2) {
            let parts = (1..=k / 2).map(|i| vec![i, i + k / 2]).collect();
            let p = CyclePartition::new(k, parts).unwrap();
            assert_eq!(cycle_partition_weight(&p), k * k / 2);
        }
    }

    #[test]
    fn invalid_partitions() {
        assert_eq!(
            CyclePartition::new(3, vec![vec![1, 2, 3]]),
            Err(PartitionError::OddOrZero(3))
        );
        assert_eq!(
            CyclePartition::new(4, vec![vec![1], vec![2, 3, 4]]),
            Err(PartitionError::ShortPart(0))
        );
        assert_eq!(
            CyclePartition::new(4, vec![vec![1, 5], vec![2, 3]]),
            Err(PartitionError::OutOfRange(5))
        );
        assert_eq!(
            CyclePartition::new(4, vec![vec![1, 2], vec![2, 3]]),
            Err(PartitionError::Repeated(2))
        );
        assert_eq!(
            CyclePartition::new(4, vec![vec![1, 2, 3]]),
            Err(PartitionError::Uncovered(4))
        );
    }

    #[test]
    fn maxima() {
        let got: Vec<_> = [2, 4, 6, 8]
            .iter()
            .map(|&k| max_partition_weight(k).unwrap())
            .collect();
        assert_eq!(got, vec![2, 8, 18, 32]);
        assert_eq!(max_partition_weight(10), Ok(50));
        assert_eq!(max_partition_weight(5), Err(PartitionError::OddOrZero(5)));
        assert_eq!(
            max_partition_weight(12),
            Err(PartitionError::TooLarge { k: 12 })
        );
    }

    fn naive_max(k: usize) -> usize {
        // every set partition, every cyclic order of every block
        fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
            if items.len() <= 1 {
                return vec![items.to_vec()];
            }
            let mut out = Vec::new();
            for i in 0..items.len() {
                let mut rest = items.to_vec();
                let x = rest.remove(i);
                for mut p in permutations(&rest) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }
        fn go(remaining: Vec<usize>, acc: usize, best: &mut usize) {
            let Some((&first, rest)) = remaining.split_first() else {
                *best = (*best).max(acc);
                return;
            };
            for mask in 1usize..1 << rest.len() {
                let block: Vec<usize> = std::iter::once(first)
                    .chain(
                        (0..rest.len())
                            .filter(|i| mask >> i & 1 == 1)
                            .map(|i| rest[i]),
                    )
                    .collect();
                let left: Vec<usize> = (0..rest.len())
                    .filter(|i| mask >> i & 1 == 0)
                    .map(|i| rest[i])
                    .collect();
                let heaviest = permutations(&block[1..])
                    .into_iter()
                    .map(|p| {
                        let mut c = vec![first];
                        c.extend(p);
                        cycle_weight(&c)
                    })
                    .max()
                    .unwrap();
                go(left, acc + heaviest, best);
            }
        }
        let mut best = 0;
        go((1..=k).collect(), 0, &mut best);
        best
    }

    #[test]
    fn dp_matches_naive_enumeration() {
        for k in [2, 4, 6] {
            assert_eq!(max_partition_weight(k).unwrap(), naive_max(k), "k={k}");
        }
    }
}
