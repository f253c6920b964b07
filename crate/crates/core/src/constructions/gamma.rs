use super::ConstructionError;
use crate::graph::DecomposedGraph;

/// Parameters of the Hamiltonian construction whose shortest cycle with at
/// most two chords has length `4l + 2`.
///
/// The Hamilton cycle `0, 1, ..., n - 1` with `n = 8l² + 6l` is cut into
/// blocks of `2l` vertices. The even vertex `x = 2l·k + 2j` (`0 ≤ j < l`)
/// is joined to `x + a_j (mod n)` with `a_j = 4l(j + 1) + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gamma2Params {
    l: usize,
}

impl Gamma2Params {
    pub fn new(l: usize) -> Result<Self, ConstructionError> {
        if l == 0 {
            return Err(ConstructionError::LevelTooSmall);
        }
        Ok(Gamma2Params { l })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn n(&self) -> usize {
        8 * self.l * self.l + 6 * self.l
    }

    pub fn block_size(&self) -> usize {
        2 * self.l
    }

    /// `4l + 2`
    pub fn target_length(&self) -> usize {
        4 * self.l + 2
    }

    pub fn offset(&self, j: usize) -> usize {
        4 * self.l * (j + 1) + 1
    }

    pub fn offsets(&self) -> Vec<usize> {
        (0..self.l).map(|j| self.offset(j)).collect()
    }

    /// Chords `(x, x + a_j mod n)` for every even `x`.
    pub fn chords(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .step_by(2)
            .map(|x| {
                let j = (x % self.block_size()) / 2;
                (x, (x + self.offset(j)) % n)
            })
            .collect()
    }
}

/// The single-Hamilton-cycle construction; `l = 1` gives the Heawood graph.
pub fn construct_gamma2(l: usize) -> Result<DecomposedGraph, ConstructionError> {
    let p = Gamma2Params::new(l)?;
    Ok(DecomposedGraph::new(
        p.n(),
        vec![(0..p.n()).collect()],
        p.chords(),
    )?)
}

/// Same vertices and chords as [`construct_gamma2`], with the 2-factor made
/// of the even-indexed and the odd-indexed vertices in increasing order.
/// Chords always join the two cycles, so every cycle has an even number of
/// chords.
pub fn construct_gamma3(l: usize) -> Result<DecomposedGraph, ConstructionError> {
    let p = Gamma2Params::new(l)?;
    let n = p.n();
    let even = (0..n).step_by(2).collect();
    let odd = (1..n).step_by(2).collect();
    Ok(DecomposedGraph::new(n, vec![even, odd], p.chords())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;
    use crate::graph::{girth, is_isomorphic};
    use crate::solver::{bounded_min_chord_cycle, min_chord_cycle};

    /// Cyclic distance on Z_n.
    fn cyc(x: i64, n: i64) -> i64 {
        let r = x.rem_euclid(n);
        r.min(n - r)
    }

    /// Shortest cycle with at most two chords on a Hamiltonian factor,
    /// computed from chord endpoints alone: one chord plus the shorter arc,
    /// or two chords plus the two connecting arcs in either pairing.
    fn two_chord_formula(n: usize, chords: &[(usize, usize)]) -> usize {
        let n = n as i64;
        let mut best = n;
        for &(a, b) in chords {
            best = best.min(cyc(a as i64 - b as i64, n) + 1);
        }
        for (i, &(a, b)) in chords.iter().enumerate() {
            for &(c, d) in &chords[i + 1..] {
                let (a, b, c, d) = (a as i64, b as i64, c as i64, d as i64);
                best = best.min(cyc(b - c, n) + cyc(d - a, n) + 2);
                best = best.min(cyc(b - d, n) + cyc(c - a, n) + 2);
            }
        }
        best as usize
    }

    #[test]
    fn first_member_is_heawood() {
        let dg = construct_gamma2(1).unwrap();
        assert_eq!(dg.n(), 14);
        assert!(dg.validate().is_empty());
        let mut chords: Vec<_> = dg.chords().iter().map(|e| (e.0, e.1)).collect();
        chords.sort();
        assert_eq!(
            chords,
            vec![(0, 5), (1, 10), (2, 7), (3, 12), (4, 9), (6, 11), (8, 13)]
        );
        assert_eq!(girth(dg.graph()), Some(6));
        assert_eq!(is_isomorphic(dg.graph(), &data::heawood()), Ok(true));
    }

    #[test]
    fn parameters() {
        let p = Gamma2Params::new(2).unwrap();
        assert_eq!(p.n(), 44);
        assert_eq!(p.offsets(), vec![9, 17]);
        assert_eq!(Gamma2Params::new(0), Err(ConstructionError::LevelTooSmall));
        assert!(construct_gamma3(0).is_err());
    }

    #[test]
    fn offset_conditions() {
        for l in 1..=8 {
            let p = Gamma2Params::new(l).unwrap();
            let (n, g) = (p.n(), p.target_length());
            assert_eq!(n % 2, 0);
            assert_eq!(n % p.block_size(), 0);
            for a in p.offsets() {
                assert_eq!(a % 2, 1);
                assert_eq!(a % p.block_size(), p.offset(0) % p.block_size());
                assert!(g - 1 <= a && a <= n - g + 1);
            }
            // the chord map is a bijection from even to odd vertices
            let mut hit = vec![false; n];
            for (x, y) in p.chords() {
                assert_eq!((x % 2, y % 2), (0, 1));
                assert!(!std::mem::replace(&mut hit[y], true));
            }
            assert!(construct_gamma2(l).unwrap().graph().is_cubic());
        }
    }

    #[test]
    fn two_chord_value_matches_formula() {
        for l in 1..=4 {
            let dg = construct_gamma2(l).unwrap();
            let chords: Vec<_> = dg.chords().iter().map(|e| (e.0, e.1)).collect();
            let expected = two_chord_formula(dg.n(), &chords);
            assert_eq!(expected, 4 * l + 2, "formula at l = {l}");
            assert_eq!(min_chord_cycle(&dg, 2).length, expected);
        }
    }

    #[test]
    fn bipartite_variant() {
        let dg = construct_gamma3(1).unwrap();
        assert_eq!(dg.factor_cycle_lengths(), vec![7, 7]);
        for l in 1..=3 {
            let dg = construct_gamma3(l).unwrap();
            let r3 = min_chord_cycle(&dg, 3);
            assert_eq!(r3.length, 2 * l + 2);
            assert_eq!(min_chord_cycle(&dg, 2).length, 2 * l + 2);
            // nothing shorter with up to three chords, by direct enumeration
            assert!(bounded_min_chord_cycle(&dg, 3, 2 * l + 1).is_none());
            for k in 0..=5 {
                assert_eq!(min_chord_cycle(&dg, k).chords_used % 2, 0);
            }
        }
    }
}
