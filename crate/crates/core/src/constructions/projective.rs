use super::ConstructionError;
use crate::graph::Graph;

pub fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

/// Normalized representatives of the 1-dimensional subspaces of F_q³: the
/// first nonzero coordinate is 1.
fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            out.push([1, a, b]);
        }
    }
    for a in 0..q {
        out.push([0, 1, a]);
    }
    out.push([0, 0, 1]);
    out
}

/// Points versus lines of the projective plane over the prime field F_q.
///
/// Vertices `0..N` are points and `N..2N` lines, `N = q² + q + 1`; a line is
/// the kernel of a linear form, represented by the same normalized vectors,
/// and point `p` lies on line `L` iff `p · L ≡ 0 (mod q)`. The result is
/// `(q + 1)`-regular, bipartite, and has girth 6.
pub fn projective_plane_incidence(q: usize) -> Result<Graph, ConstructionError> {
    if !is_prime(q) {
        return Err(ConstructionError::NotPrime(q));
    }
    let points = projective_points(q);
    let count = points.len();
    let mut edges = Vec::with_capacity(count * (q + 1));
    for (i, p) in points.iter().enumerate() {
        for (j, line) in points.iter().enumerate() {
            let dot: usize = p.iter().zip(line).map(|(a, b)| a * b).sum();
            if dot % q == 0 {
                edges.push((i, count + j));
            }
        }
    }
    Ok(Graph::new(2 * count, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;
    use crate::graph::{girth, is_isomorphic};

    #[test]
    fn primes() {
        let small: Vec<_> = (0..30).filter(|&q| is_prime(q)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn fano_plane_is_heawood() {
        let g = projective_plane_incidence(2).unwrap();
        assert_eq!(g.n(), 14);
        assert!(g.is_cubic());
        assert_eq!(is_isomorphic(&g, &data::heawood()), Ok(true));
    }

    #[test]
    fn larger_planes() {
        for q in [3, 5, 7] {
            let g = projective_plane_incidence(q).unwrap();
            assert_eq!(g.n(), 2 * (q * q + q + 1));
            assert_eq!(g.regular_degree(), Some(q + 1));
            assert_eq!(girth(&g), Some(6));
            // two points share exactly one line, two lines exactly one point
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    let common = g.neighbors(u).filter(|&w| g.has_edge(v, w)).count();
                    let same_side = (u < g.n() / 2) == (v < g.n() / 2);
                    assert_eq!(common, usize::from(same_side));
                }
            }
        }
    }

    #[test]
    fn prime_powers_rejected() {
        assert_eq!(
            projective_plane_incidence(4),
            Err(ConstructionError::NotPrime(4))
        );
        assert_eq!(
            projective_plane_incidence(1),
            Err(ConstructionError::NotPrime(1))
        );
    }
}
