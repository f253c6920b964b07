/// Cycle types of a 2-factor on `n` vertices: all multisets of cycle
/// lengths `>= 3` summing to `n`, each non-increasing, listed in decreasing
/// lexicographic order.
pub fn enumerate_two_factor_types(n: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (3..=max_part.min(remaining)).rev() {
            let rest = remaining - part;
            if rest != 0 && rest < 3 {
                continue;
            }
            current.push(part);
            go(rest, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        assert_eq!(enumerate_two_factor_types(6), vec![vec![6], vec![3, 3]]);
        assert_eq!(enumerate_two_factor_types(7), vec![vec![7], vec![4, 3]]);
        assert_eq!(
            enumerate_two_factor_types(9),
            vec![vec![9], vec![6, 3], vec![5, 4], vec![3, 3, 3]]
        );
        assert_eq!(enumerate_two_factor_types(3), vec![vec![3]]);
        assert!(enumerate_two_factor_types(2).is_empty());
    }

    #[test]
    fn counts() {
        // partitions of n into parts >= 3
        let counts: Vec<_> = (3..=16)
            .map(|n| enumerate_two_factor_types(n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 2, 3, 4, 5, 6, 9, 10, 13, 17, 21]);
    }
}
