//! Pairwise disjoint `t`-subsets through bipartite matching.

/// Picks pairwise disjoint `U_i ⊆ sets[i]` with `|U_i| = t`, or `None` when
/// the `t`-fold Hall condition fails.
///
/// Each set is replicated `t` times and matched into the ground elements by
/// augmenting paths, trying elements in increasing order, so the result is
/// deterministic. Every returned `U_i` is sorted.
pub fn hall_disjoint_sets(sets: &[Vec<usize>], t: usize) -> Option<Vec<Vec<usize>>> {
    let mut ground: Vec<usize> = sets.iter().flatten().copied().collect();
    ground.sort_unstable();
    ground.dedup();
    let adj: Vec<Vec<usize>> = sets
        .iter()
        .map(|s| {
            let mut idx: Vec<usize> = s.iter().map(|v| ground.binary_search(v).expect("collected")).collect();
            idx.sort_unstable();
            idx.dedup();
            idx
        })
        .collect();
    if adj.iter().any(|a| a.len() < t) || sets.len() * t > ground.len() {
        return None;
    }

    // left node k stands for copy k % t of set k / t
    let mut owner: Vec<Option<usize>> = vec![None; ground.len()];
    for k in 0..sets.len() * t {
        let mut seen = vec![false; ground.len()];
        if !augment(k, t, &adj, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut out = vec![Vec::with_capacity(t); sets.len()];
    for (e, o) in owner.iter().enumerate() {
        if let Some(k) = o {
            out[k / t].push(ground[e]);
        }
    }
    Some(out)
}

fn augment(k: usize, t: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &e in &adj[k / t] {
        if std::mem::replace(&mut seen[e], true) {
            continue;
        }
        if owner[e].is_none_or(|other| augment(other, t, adj, owner, seen)) {
            owner[e] = Some(k);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            hall_disjoint_sets(&[vec![1, 2], vec![3, 4]], 2),
            Some(vec![vec![1, 2], vec![3, 4]])
        );
        assert_eq!(hall_disjoint_sets(&[vec![1], vec![1]], 1), None);
        assert_eq!(hall_disjoint_sets(&[], 3), Some(vec![]));
    }

    #[test]
    fn augmenting_path_needed() {
        // greedy would give 1 to the first set
        let out = hall_disjoint_sets(&[vec![1, 2], vec![1]], 1).unwrap();
        assert_eq!(out, vec![vec![2], vec![1]]);
    }

    #[test]
    fn large_sets_always_succeed() {
        // q sets of size q t overlap arbitrarily
        let (q, t) = (3, 2);
        let sets: Vec<Vec<usize>> = (0..q).map(|i| (i..i + q * t).collect()).collect();
        let out = hall_disjoint_sets(&sets, t).unwrap();
        let mut all: Vec<usize> = out.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        assert_eq!(all.len(), q * t);
        for (u, s) in out.iter().zip(&sets) {
            assert_eq!(u.len(), t);
            assert!(u.iter().all(|v| s.contains(v)));
        }
    }
}
