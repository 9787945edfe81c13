//! Heavy stars and heavy paths.
//!
//! A star with leaf set `S` is heavy when `|N*_L(S)|` reaches the threshold;
//! a path `xyz` is heavy when its ends have that many common neighbours.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::for_each_combination;
use crate::graph::Graph;

/// Whether the leaves `s` have at least `threshold` common neighbours in `l`.
pub fn heavy_star_classify(l: &Graph, s: &[usize], threshold: usize) -> Result<bool> {
    let set = l.vertex_set(s)?;
    if set.is_clear() {
        return Err(Error::EmptyQuery);
    }
    Ok(l.common_neighbor_set(&set)?.count_ones(..) >= threshold)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HeavyCount {
    pub total: u64,
    pub heavy: u64,
}

/// Tallies all `p`-stars of `l` (a centre together with `p` of its
/// neighbours) and how many of them are heavy.
pub fn heavy_star_count(l: &Graph, p: usize, threshold: usize) -> Result<HeavyCount> {
    if p == 0 {
        return Err(Error::InvalidParameter("stars need at least one leaf".into()));
    }
    let mut count = HeavyCount { total: 0, heavy: 0 };
    for centre in 0..l.n() {
        let nbrs: Vec<usize> = l.neighbors(centre).collect();
        for_each_combination(nbrs.len(), p, |idx| {
            let mut common = l.neighbor_set(nbrs[idx[0]]).clone();
            for &i in &idx[1..] {
                common.intersect_with(l.neighbor_set(nbrs[i]));
            }
            count.total += 1;
            if common.count_ones(..) >= threshold {
                count.heavy += 1;
            }
        });
    }
    Ok(count)
}

/// Whether the path `xyz` of `l` is heavy, i.e. `|N*_L(x, z)| ≥ threshold`.
pub fn heavy_path_classify(l: &Graph, x: usize, y: usize, z: usize, threshold: usize) -> Result<bool> {
    for v in [x, y, z] {
        l.check_vertex(v)?;
    }
    if x == z || !l.has_edge(x, y) || !l.has_edge(y, z) {
        return Err(Error::InvalidParameter(format!("{x}-{y}-{z} is not a path of L")));
    }
    Ok(l.neighbor_set(x).intersection_count(l.neighbor_set(z)) >= threshold)
}

/// Tallies the paths on three vertices of `l`, each counted once with its
/// ends unordered, and how many are heavy.
pub fn heavy_path_count(l: &Graph, threshold: usize) -> HeavyCount {
    let mut count = HeavyCount { total: 0, heavy: 0 };
    for y in 0..l.n() {
        let nbrs: Vec<usize> = l.neighbors(y).collect();
        for_each_combination(nbrs.len(), 2, |idx| {
            let (x, z) = (nbrs[idx[0]], nbrs[idx[1]]);
            count.total += 1;
            if l.neighbor_set(x).intersection_count(l.neighbor_set(z)) >= threshold {
                count.heavy += 1;
            }
        });
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_examples() {
        let k35 = Graph::complete_bipartite(3, 5);
        assert!(heavy_star_classify(&k35, &[0, 1, 2], 5).unwrap());
        assert!(!heavy_star_classify(&k35, &[0, 1, 2], 6).unwrap());
        assert_eq!(heavy_star_classify(&k35, &[], 1), Err(Error::EmptyQuery));
    }

    #[test]
    fn star_count_k23() {
        // 2-stars: centres on the 3-side give 3 stars with leaves {0,1}
        // (3 common nbrs); centres on the 2-side give 2 * 3 stars with
        // leaves a pair of the 3-side (2 common nbrs)
        let l = Graph::complete_bipartite(2, 3);
        assert_eq!(heavy_star_count(&l, 2, 3).unwrap(), HeavyCount { total: 9, heavy: 3 });
        assert_eq!(heavy_star_count(&l, 2, 2).unwrap(), HeavyCount { total: 9, heavy: 9 });
    }

    #[test]
    fn path_examples() {
        // K_{2,m}: the two left vertices share all m right vertices
        for m in [3, 4] {
            let l = Graph::complete_bipartite(2, m);
            assert!(heavy_path_classify(&l, 0, 2, 1, m).unwrap());
            assert!(!heavy_path_classify(&l, 0, 2, 1, m + 1).unwrap());
        }
        let l = Graph::complete_bipartite(2, 3);
        assert!(heavy_path_classify(&l, 0, 1, 2, 1).is_err());
        assert_eq!(heavy_path_count(&l, 3), HeavyCount { total: 9, heavy: 3 });
    }
}
